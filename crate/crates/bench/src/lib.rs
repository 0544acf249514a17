//! Fixtures shared by the criterion benches.

use regunip_core::{Field, MatrixGroup, Realization, Result};

/// `label` realized over `F_{p^k}`, closure not yet forced.
pub fn group(label: &str, p: u32, k: u32) -> Result<MatrixGroup> {
    let f = Field::new(p, k)?;
    Ok(MatrixGroup::realized(&Realization::parse(label)?, &f))
}

/// Same group with its closure computed.
pub fn forced(label: &str, p: u32, k: u32) -> Result<MatrixGroup> {
    let g = group(label, p, k)?;
    g.closure()?;
    Ok(g)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn fixtures_build() {
        assert_eq!(forced("SL3", 3, 1).unwrap().order().unwrap(), 5616);
        assert_eq!(group("Sp4", 2, 1).unwrap().order().unwrap(), 720);
    }
}
