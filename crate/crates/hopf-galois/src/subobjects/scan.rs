use super::{CoidealSubalgebra, GeneralizedQuotient, RightIdealCoideal};
use crate::error::{Error, Result};
use crate::hopf::HopfAlgebra;
use crate::linalg::{Mat, Subspace};
use crate::scalar::Field;

/// Largest ambient dimension for exhaustive scans.
pub const SCAN_CAP: usize = 5;

const MAX_SUBSPACES: usize = 200_000;

/// Every subspace of `GF(p)^n`, by RREF pivot pattern then free entries.
pub fn enumerate_subspaces(field: Field, n: usize) -> Result<Vec<Subspace>> {
    let p = match field {
        Field::Fp(p) => p,
        _ => {
            return Err(Error::Input(format!(
                "subspace scans need a finite field, not {}",
                field.label()
            )))
        }
    };
    if n > SCAN_CAP {
        return Err(Error::EnumerationCap(SCAN_CAP));
    }
    let mut out = Vec::new();
    for mask in 0u32..(1 << n) {
        let pivots: Vec<usize> = (0..n).filter(|i| mask & (1 << i) != 0).collect();
        let slots: Vec<(usize, usize)> = pivots
            .iter()
            .enumerate()
            .flat_map(|(r, &pc)| {
                (pc + 1..n)
                    .filter(|c| !pivots.contains(c))
                    .map(move |c| (r, c))
            })
            .collect();
        let count = (p as usize)
            .checked_pow(slots.len() as u32)
            .unwrap_or(usize::MAX);
        if out.len().saturating_add(count) > MAX_SUBSPACES {
            return Err(Error::EnumerationCap(MAX_SUBSPACES));
        }
        for code in 0..count {
            let mut m = Mat::zeros(field, pivots.len(), n);
            for (r, &pc) in pivots.iter().enumerate() {
                m.set(r, pc, field.one());
            }
            let mut rest = code;
            for &(r, c) in &slots {
                m.set(r, c, field.int((rest % p as usize) as i64));
                rest /= p as usize;
            }
            out.push(Subspace::from_rref_unchecked(m, pivots.clone()));
        }
    }
    Ok(out)
}

/// All coideal subalgebras and generalized quotients of a Hopf algebra over `GF(p)`.
#[derive(Clone, Debug)]
pub struct GeneralizedScan {
    pub subs: Vec<CoidealSubalgebra>,
    pub quots: Vec<GeneralizedQuotient>,
}

pub fn scan_generalized(h: &HopfAlgebra) -> Result<GeneralizedScan> {
    let mut subs = Vec::new();
    let mut quots = Vec::new();
    for s in enumerate_subspaces(h.field(), h.dim())? {
        if let Ok(k) = CoidealSubalgebra::new(h, s.clone()) {
            subs.push(k);
        }
        if let Ok(i) = RightIdealCoideal::new(h, s) {
            quots.push(GeneralizedQuotient::new(h, i)?);
        }
    }
    Ok(GeneralizedScan { subs, quots })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::builders::{group_algebra, GroupTable};
    use crate::subobjects::takeuchi_check;

    #[test]
    fn subspace_counts_are_gaussian_binomials() {
        let f = Field::fp(2).unwrap();
        assert_eq!(enumerate_subspaces(f, 3).unwrap().len(), 1 + 7 + 7 + 1);
        let g3 = Field::fp(3).unwrap();
        assert_eq!(enumerate_subspaces(g3, 2).unwrap().len(), 1 + 4 + 1);
        let all = enumerate_subspaces(f, 4).unwrap();
        assert_eq!(all.len(), 1 + 15 + 35 + 15 + 1);
        for (i, a) in all.iter().enumerate() {
            assert_eq!(*a, Subspace::from_mat(a.basis()));
            assert!(all[..i].iter().all(|b| b != a));
        }
        assert!(enumerate_subspaces(Field::Q, 2).is_err());
    }

    #[test]
    fn klein_four_over_gf3_is_exhaustively_takeuchi() {
        let f = Field::fp(3).unwrap();
        let h = group_algebra(&GroupTable::klein(), f);
        let scan = scan_generalized(&h).unwrap();
        assert_eq!(scan.subs.len(), 5);
        assert_eq!(scan.quots.len(), 5);
        assert!(takeuchi_check(&h, &scan.subs, &scan.quots).unwrap().ok());
    }
}
