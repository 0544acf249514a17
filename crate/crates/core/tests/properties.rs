use std::sync::{Arc, OnceLock};

use proptest::prelude::*;
use regunip_core::chevalley::{fixed_point_subgroup, Closure};
use regunip_core::exactalg::jordan_partition;
use regunip_core::parabolics::{enumerate_parabolics, limit_membership_classify, LimitClass, ParabolicDescriptor};
use regunip_core::rootdata::{canonical_cocharacter, parabolic_root_partition};
use regunip_core::{Cocharacter, Endomorphism, Fe, Field, Mat, MatrixGroup, Realization, RootDatum};

struct Fixture {
    group: MatrixGroup,
    closure: Arc<Closure>,
    unipotents: Vec<Mat>,
}

fn fixture(label: &str, p: u32) -> Fixture {
    let f = Field::new(p, 1).unwrap();
    let group = MatrixGroup::realized(&Realization::parse(label).unwrap(), &f);
    let closure = group.closure().unwrap();
    let unipotents = closure.elements().iter().filter(|u| u.is_unipotent(&f)).cloned().collect();
    Fixture { group, closure, unipotents }
}

fn sl3_f3() -> &'static Fixture {
    static F: OnceLock<Fixture> = OnceLock::new();
    F.get_or_init(|| fixture("SL3", 3))
}

fn sp4_f2() -> &'static Fixture {
    static F: OnceLock<Fixture> = OnceLock::new();
    F.get_or_init(|| fixture("Sp4", 2))
}

fn sl4_f2() -> &'static Fixture {
    static F: OnceLock<Fixture> = OnceLock::new();
    F.get_or_init(|| fixture("SL4", 2))
}

fn pick(fx: &Fixture, i: usize) -> &Mat {
    &fx.closure.elements()[i % fx.closure.len()]
}

const FIELDS: [(u32, u32); 6] = [(2, 1), (2, 2), (2, 4), (3, 1), (3, 2), (5, 1)];

fn subsets(r: usize) -> Vec<Vec<usize>> {
    (0..1u32 << r).map(|m| (0..r).filter(|j| m >> j & 1 == 1).collect()).collect()
}

/// Integer combination of two canonical cocharacters.
fn combined(d: &Arc<RootDatum>, s1: &[usize], s2: &[usize], a: i64, b: i64) -> Cocharacter {
    let (l1, l2) = (canonical_cocharacter(d, s1), canonical_cocharacter(d, s2));
    let w = l1.weights().iter().zip(l2.weights()).map(|(x, y)| a * x + b * y).collect();
    Cocharacter::new(d, w).unwrap()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(128))]

    #[test]
    fn field_axioms(which in 0..FIELDS.len(), a in any::<u16>(), b in any::<u16>(), c in any::<u16>()) {
        let (p, k) = FIELDS[which];
        let f = Field::new(p, k).unwrap();
        let q = f.order() as u16;
        let (a, b, c) = (Fe(a % q), Fe(b % q), Fe(c % q));
        prop_assert_eq!(f.add(f.add(a, b), c), f.add(a, f.add(b, c)));
        prop_assert_eq!(f.mul(f.mul(a, b), c), f.mul(a, f.mul(b, c)));
        prop_assert_eq!(f.mul(a, f.add(b, c)), f.add(f.mul(a, b), f.mul(a, c)));
        prop_assert_eq!(f.add(a, f.neg(a)), Fe::ZERO);
        if !a.is_zero() {
            prop_assert_eq!(f.mul(a, f.inv(a).unwrap()), Fe::ONE);
            prop_assert_eq!(f.pow(a, u64::from(q) - 1), Fe::ONE);
        }
    }

    #[test]
    fn jordan_type_is_conjugation_invariant(big in any::<bool>(), i in any::<usize>(), entries in prop::collection::vec(0u16..3, 16)) {
        let (fx, n, p) = if big { (sl4_f2(), 4, 2) } else { (sl3_f3(), 3, 3) };
        let f = fx.group.field();
        let u = &fx.unipotents[i % fx.unipotents.len()];
        let g = Mat::from_fn(n, n, |r, c| Fe(entries[r * n + c] % p as u16));
        let Some(gi) = g.inverse(f) else { return Ok(()); };
        prop_assert_eq!(jordan_partition(&u.conj(&g, &gi, f), f).unwrap(), jordan_partition(u, f).unwrap());
    }

    #[test]
    fn limit_is_multiplicative(sp in any::<bool>(), mask in 0u32..4, i in any::<usize>(), j in any::<usize>()) {
        let fx = if sp { sp4_f2() } else { sl3_f3() };
        let real = fx.group.realization().unwrap();
        let f = fx.group.field();
        let subset: Vec<usize> = (0..2).filter(|b| mask >> b & 1 == 1).collect();
        let lambda = canonical_cocharacter(real.datum(), &subset);
        let (g, h) = (pick(fx, i), pick(fx, j));
        let (cg, lg) = limit_membership_classify(&lambda, real, g, f);
        let (ch, lh) = limit_membership_classify(&lambda, real, h, f);
        if cg != LimitClass::Outside && ch != LimitClass::Outside {
            let (cgh, lgh) = limit_membership_classify(&lambda, real, &g.mul(h, f), f);
            prop_assert_ne!(cgh, LimitClass::Outside);
            prop_assert_eq!(lgh.value().unwrap(), &lg.value().unwrap().mul(lh.value().unwrap(), f));
            let (cl, _) = limit_membership_classify(&lambda, real, lg.value().unwrap(), f);
            prop_assert_eq!(cl, LimitClass::InLevi);
        }
    }

    #[test]
    fn opposite_parabolics_meet_in_the_levi(sp in any::<bool>(), mask in 0u32..4, i in any::<usize>()) {
        let fx = if sp { sp4_f2() } else { sl3_f3() };
        let real = fx.group.realization().unwrap();
        let f = fx.group.field();
        let subset: Vec<usize> = (0..2).filter(|b| mask >> b & 1 == 1).collect();
        let lambda = canonical_cocharacter(real.datum(), &subset);
        let g = pick(fx, i);
        let (c, _) = limit_membership_classify(&lambda, real, g, f);
        let (cn, _) = limit_membership_classify(&lambda.neg(), real, g, f);
        prop_assert_eq!(c != LimitClass::Outside && cn != LimitClass::Outside, c == LimitClass::InLevi);
    }

    #[test]
    fn negated_cocharacter_swaps_radical_and_outside(
        label in prop::sample::select(vec!["A1", "A2", "A3", "C2", "C3", "A1xA1"]),
        m1 in 0u32..8, m2 in 0u32..8, a in -3i64..=3, b in -3i64..=3,
    ) {
        let d = Arc::new(RootDatum::parse(label).unwrap());
        let r = d.rank();
        let s1: Vec<usize> = (0..r).filter(|j| m1 >> j & 1 == 1).collect();
        let s2: Vec<usize> = (0..r).filter(|j| m2 >> j & 1 == 1).collect();
        let lambda = combined(&d, &s1, &s2, a, b);
        let part = parabolic_root_partition(&lambda).unwrap();
        let neg = parabolic_root_partition(&lambda.neg()).unwrap();
        let sorted = |mut v: Vec<usize>| { v.sort(); v };
        prop_assert_eq!(sorted(part.levi.clone()), sorted(neg.levi));
        prop_assert_eq!(sorted(part.radical.clone()), sorted(neg.outside));
        prop_assert_eq!(sorted(part.outside), sorted(neg.radical));
        // the levi roots are closed under addition
        for &x in &part.levi {
            for &y in &part.levi {
                let sum: Vec<i64> = d.root(x).iter().zip(d.root(y)).map(|(u, v)| u + v).collect();
                if let Some(z) = d.root_index(&sum) {
                    prop_assert!(part.levi.contains(&z));
                }
            }
        }
    }

    #[test]
    fn parabolic_membership_is_consistent(mask in 0u32..3, which in any::<usize>(), i in any::<usize>()) {
        let fx = sl4_f2();
        let f = fx.group.field();
        let subset: Vec<usize> = (0..3).filter(|b| mask >> b & 1 == 1).collect();
        let all = enumerate_parabolics(&fx.group, &subset, 1).unwrap();
        let p: &ParabolicDescriptor = &all[which % all.len()];
        let g = pick(fx, i);
        let (inp, inl, inr) = (p.in_parabolic(g, f), p.in_levi(g, f), p.in_radical(g, f));
        prop_assert!(!inl || inp);
        prop_assert!(!inr || inp);
        prop_assert!(!(inl && inr) || g.is_identity());
    }
}

#[test]
fn canonical_cocharacter_has_the_subset_as_levi() {
    for label in ["A1", "A2", "A3", "C2", "C3", "A1xA1"] {
        let d = Arc::new(RootDatum::parse(label).unwrap());
        for s in subsets(d.rank()) {
            let mut levi = parabolic_root_partition(&canonical_cocharacter(&d, &s)).unwrap().levi;
            levi.sort();
            let expected: Vec<usize> = (0..d.num_roots())
                .filter(|&a| d.root(a).iter().enumerate().all(|(j, &c)| c == 0 || s.contains(&j)))
                .collect();
            assert_eq!(levi, expected, "{label} {s:?}");
        }
    }
}

#[test]
fn non_adjacent_root_elements_commute() {
    for (label, p, k) in [("SL3", 2, 2), ("SL4", 3, 1), ("SL4", 2, 1)] {
        let f = Field::new(p, k).unwrap();
        let real = Realization::parse(label).unwrap();
        let d = real.datum();
        let simple: Vec<usize> = (0..d.rank())
            .map(|j| d.root_index(&(0..d.rank()).map(|i| i64::from(i == j)).collect::<Vec<_>>()).unwrap())
            .collect();
        for &a in &simple {
            for &b in &simple {
                let sum: Vec<i64> = d.root(a).iter().zip(d.root(b)).map(|(x, y)| x + y).collect();
                if d.root_index(&sum).is_some() {
                    continue;
                }
                for s in f.elements() {
                    for t in f.elements() {
                        let (x, y) = (real.root_element(a, s, &f), real.root_element(b, t, &f));
                        assert_eq!(x.mul(&y, &f), y.mul(&x, &f), "{label}: roots {a} {b}");
                    }
                }
            }
        }
    }
}

#[test]
fn standard_regular_unipotent_is_in_the_standard_borel() {
    for (label, p) in [("SL2", 3), ("SL3", 2), ("SL4", 2), ("Sp4", 2), ("Sp6", 2), ("SL2xSL2", 2)] {
        let f = Field::new(p, 1).unwrap();
        let real = Realization::parse(label).unwrap();
        let u = real.standard_regular_unipotent(&f);
        let b = ParabolicDescriptor::standard(&real, &[], 1);
        assert!(b.in_parabolic(&u, &f) && u.is_unipotent(&f), "{label}");
        assert!(real.contains(&u, &f), "{label}");
    }
}

#[test]
fn frobenius_fixes_exactly_the_subfield_matrices() {
    for (label, k, q) in [("SL2", 4, 4), ("SL2", 2, 2), ("SL2xSL2", 2, 2)] {
        let f = Field::new(2, k).unwrap();
        let g = MatrixGroup::realized(&Realization::parse(label).unwrap(), &f);
        let sub = f.subfield(q).unwrap();
        let fixed = fixed_point_subgroup(&g, &Endomorphism::Frobenius { q }).unwrap();
        let cl = g.closure().unwrap();
        let rational: Vec<&Mat> = cl.elements().iter().filter(|m| m.entries_in(&sub)).collect();
        assert_eq!(fixed.order().unwrap(), rational.len(), "{label} at 2^{k}");
        assert!(rational.iter().all(|m| fixed.contains(m).unwrap()));
    }
}

#[test]
fn borels_times_borel_order_is_group_order() {
    for (label, p, k) in [("SL2", 3, 1), ("SL2", 2, 2), ("SL3", 2, 1), ("Sp4", 2, 1), ("SL2xSL2", 2, 1), ("GL2", 3, 1)]
    {
        let f = Field::new(p, k).unwrap();
        let real = Realization::parse(label).unwrap();
        let g = MatrixGroup::realized(&real, &f);
        let b = ParabolicDescriptor::standard(&real, &[], 1);
        let cl = g.closure().unwrap();
        let borel_order = cl.elements().iter().filter(|x| b.in_parabolic(x, &f)).count();
        let borels = regunip_core::parabolics::borel_count(&g).unwrap() as usize;
        assert_eq!(borels * borel_order, cl.len(), "{label} over F{}", f.order());
    }
}
