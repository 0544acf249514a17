//! Decision procedures and the verdicts they return.
//!
//! Each verdict records whether its answer is exact over the algebraic
//! closure or only established at a finite level. Exact answers come with an
//! argument that reduces the question to finitely many level-independent
//! checks:
//!
//! * absolute irreducibility: the algebra spanned by a group is the full
//!   matrix algebra iff the group acts absolutely irreducibly (Burnside);
//! * G-irreducibility of an overgroup of a regular unipotent: every parabolic
//!   containing the group contains the Borel of that unipotent, so only the
//!   standard parabolics over that Borel need testing, and membership is a
//!   shape condition on matrix entries;
//! * regularity of a unipotent in `SL_n`/`GL_n`: a single Jordan block;
//! * a containing parabolic found at any level disproves G-irreducibility.
//!
//! Everything else is reported as `AtLevel(d)`.

mod irreducible;
mod reducible;
mod regular;
mod sigma;

use serde::{Deserialize, Serialize};

use crate::exactalg::{Mat, Subspace};

pub use irreducible::{burnside_absolutely_irreducible, girr_brute, girr_overgroup_of_regular_unipotent};
pub use reducible::{
    gcr_check, gcr_failing_parabolics, invariant_subspaces, module_semisimple, socle, spin, Submodules,
};
pub use regular::{is_regular_unipotent, regular_in_quotient_check, regular_in_subgroup_check};
pub use sigma::{
    find_sigma_fixed_regular, opposite_radical_closure_order, semisimplify_element, sigma_stable_borel_torus_check,
    unipotent_radical_elements, SigmaBorelTorusCounts,
};

#[derive(Copy, Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Question {
    RegularUnipotent,
    GIrreducible,
    GCompletelyReducible,
    AbsolutelyIrreducible,
    ModuleSemisimple,
    Quasisemisimple,
    SigmaStableBorelTorus,
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Exactness {
    Exact,
    AtLevel(u32),
}

/// Evidence attached to a verdict.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum Witness {
    /// The unique normalized Borel, as a flag configuration and conjugator.
    UniqueBorel {
        config: Vec<Subspace>,
        conjugator: Mat,
    },
    /// Several normalized Borels; `count` is a lower bound when `truncated`.
    NormalizedBorels {
        count: usize,
        truncated: bool,
        conjugators: Vec<Mat>,
    },
    JordanPartition {
        parts: Vec<usize>,
    },
    /// A proper parabolic `c P_I c^{-1}` witnessing the answer.
    Parabolic {
        subset: Vec<usize>,
        conjugator: Mat,
        level: u32,
    },
    Socle {
        basis: Vec<Vec<u16>>,
    },
    Uncomplemented {
        basis: Vec<Vec<u16>>,
    },
    LimitElement {
        limit: Mat,
    },
    SpanDimension {
        dim: usize,
        full: usize,
    },
    /// What was exhausted for a positive answer.
    Bound {
        what: String,
        levels: Vec<u32>,
        checked: usize,
    },
    Count {
        what: String,
        value: usize,
    },
    CrossCheck {
        what: String,
        agrees: bool,
    },
    Note {
        text: String,
    },
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Verdict {
    pub question: Question,
    pub answer: bool,
    pub exactness: Exactness,
    /// Highest extension degree examined.
    pub level: u32,
    pub witnesses: Vec<Witness>,
}

impl Verdict {
    pub fn new(question: Question, answer: bool, exactness: Exactness, level: u32) -> Self {
        Verdict { question, answer, exactness, level, witnesses: Vec::new() }
    }

    pub fn with(mut self, w: Witness) -> Self {
        self.witnesses.push(w);
        self
    }

    pub fn is_exact(&self) -> bool {
        self.exactness == Exactness::Exact
    }

    /// The first witness of the given kind name.
    pub fn witness(&self, kind: &str) -> Option<&Witness> {
        self.witnesses.iter().find(|w| w.kind() == kind)
    }
}

impl Witness {
    pub fn kind(&self) -> &'static str {
        match self {
            Witness::UniqueBorel { .. } => "unique_borel",
            Witness::NormalizedBorels { .. } => "normalized_borels",
            Witness::JordanPartition { .. } => "jordan_partition",
            Witness::Parabolic { .. } => "parabolic",
            Witness::Socle { .. } => "socle",
            Witness::Uncomplemented { .. } => "uncomplemented",
            Witness::LimitElement { .. } => "limit_element",
            Witness::SpanDimension { .. } => "span_dimension",
            Witness::Bound { .. } => "bound",
            Witness::Count { .. } => "count",
            Witness::CrossCheck { .. } => "cross_check",
            Witness::Note { .. } => "note",
        }
    }

    pub fn note(text: impl Into<String>) -> Self {
        Witness::Note { text: text.into() }
    }
}

pub(crate) fn subspace_rows(s: &Subspace) -> Vec<Vec<u16>> {
    s.basis().iter().map(|v| v.iter().map(|x| x.0).collect()).collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn verdict_json_shape() {
        let v = Verdict::new(Question::GIrreducible, true, Exactness::AtLevel(2), 2).with(Witness::Bound {
            what: "parabolics".into(),
            levels: vec![1, 2],
            checked: 7,
        });
        let j = serde_json::to_value(&v).unwrap();
        assert_eq!(j["question"], "GIrreducible");
        assert_eq!(j["exactness"]["AtLevel"], 2);
        assert_eq!(j["witnesses"][0]["kind"], "bound");
        let back: Verdict = serde_json::from_value(j).unwrap();
        assert_eq!(back, v);
    }
}
