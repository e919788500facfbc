//! Echelon-form witnesses for dimension vectors `(a, b)` with
//! `b <= (r-1)a`: every arrow acts as a shifted identity `I(l)`, and distinct
//! shifts force every nonzero pencil to be injective.

use alloc::format;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use crate::exactmat::{Field, Matrix};
use crate::kronecker::{tits_form, DimVector, KroneckerRep};
use crate::{Error, Result};

/// The `b x a` matrix whose identity block starts at row `l` (1-based).
pub fn shifted_identity(field: Field, b: usize, a: usize, l: usize) -> Result<Matrix> {
    if a > b || l < 1 || l > b - a + 1 {
        return Err(Error::InvalidArgument(format!("shift {l} outside 1..={} for a {b}x{a} block", (b + 1).saturating_sub(a))));
    }
    let mut m = Matrix::zeros(field, b, a);
    for j in 0..a {
        m.set(l - 1 + j, j, field.one());
    }
    Ok(m)
}

/// Which seed pattern fixed the injection.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum EchelonCase {
    /// `b = a + s` with `s >= r-1`.
    B,
    /// `b = qa` with `2 <= q <= r-1`.
    C,
    /// `b = qa + s` with `2 <= q <= r-2` and `0 < s < a`.
    D,
}

impl fmt::Display for EchelonCase {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            EchelonCase::B => "b-case",
            EchelonCase::C => "c-case",
            EchelonCase::D => "d-case",
        })
    }
}

/// An injection `phi: {1..r} -> {1..b-a+1}` of shifts.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct EchelonSpec {
    pub r: usize,
    pub a: usize,
    pub b: usize,
    /// `phi[i]` is the shift of arrow `i + 1`.
    pub phi: Vec<usize>,
    pub case: EchelonCase,
}

/// Chooses the shifts for `(a, b)` with `q(a,b) <= 0`, `a >= 2` and
/// `b <= (r-1)a`. Seeds depend on `b = qa + s`; the remaining arrows take the
/// smallest unused shifts in increasing order.
pub fn select_phi(r: usize, a: usize, b: usize) -> Result<EchelonSpec> {
    if r < 2 || a < 2 || b > (r - 1) * a || tits_form(r, DimVector::new(a, b)) > 0 {
        return Err(Error::Precondition(format!("({a},{b}) is not an imaginary root with b <= (r-1)a for r = {r}")));
    }
    if b < a + r - 1 {
        return Err(Error::Precondition(format!("b - a = {} is smaller than r - 1 = {}", b as i64 - a as i64, r - 1)));
    }
    let (q, s) = (b / a, b % a);
    let top = b - a + 1;
    let (case, seeds): (EchelonCase, Vec<usize>) = if q == 1 {
        // s >= r-1 follows from b - a >= r - 1
        (EchelonCase::B, vec![1, s + 1, 2])
    } else if s == 0 && q <= r - 1 {
        let mut seeds: Vec<usize> = (1..=q).map(|i| (i - 1) * a + 1).collect();
        seeds.push(2);
        (EchelonCase::C, seeds)
    } else if s > 0 && q <= r.saturating_sub(2) {
        let mut seeds: Vec<usize> = (1..=q).map(|i| (i - 1) * a + 1).collect();
        seeds.push(top);
        seeds.push(2);
        (EchelonCase::D, seeds)
    } else {
        return Err(Error::Certificate(format!("no seed pattern for ({a},{b}), r = {r}")));
    };

    let mut phi: Vec<usize> = seeds.into_iter().take(r).collect();
    let mut next = 1;
    while phi.len() < r {
        while phi.contains(&next) {
            next += 1;
        }
        phi.push(next);
    }
    let spec = EchelonSpec { r, a, b, phi, case };
    check_spec(&spec)?;
    Ok(spec)
}

fn check_spec(spec: &EchelonSpec) -> Result<()> {
    let top = (spec.b + 1).saturating_sub(spec.a);
    if spec.phi.len() != spec.r || spec.a > spec.b {
        return Err(Error::InvalidArgument("malformed echelon spec".into()));
    }
    for (i, &l) in spec.phi.iter().enumerate() {
        if l < 1 || l > top || spec.phi[..i].contains(&l) {
            return Err(Error::Certificate(format!("shift assignment {:?} is not an injection into 1..={top}", spec.phi)));
        }
    }
    Ok(())
}

/// The representation with arrow `i` acting as `I(phi(i))`.
pub fn build_echelon_rep(spec: &EchelonSpec, field: Field) -> Result<KroneckerRep> {
    check_spec(spec)?;
    let mats = spec
        .phi
        .iter()
        .map(|&l| shifted_identity(field, spec.b, spec.a, l))
        .collect::<Result<Vec<_>>>()?;
    KroneckerRep::new(spec.r, DimVector::new(spec.a, spec.b), field, mats)
}

/// If every arrow of `m` is a shifted identity and the shifts are pairwise
/// distinct, returns the shifts.
///
/// Then for `alpha != 0` column `j` of the pencil has its first nonzero entry
/// in row `min{l_i : alpha_i != 0} + j - 1`, so the pencil has full column
/// rank: an exact proof of the equal kernels property. Returns `None` when
/// the structure is absent, and also when `a = 0` (no columns to inspect).
pub fn ekp_echelon_certificate(m: &KroneckerRep) -> Option<Vec<usize>> {
    let DimVector { a, b } = m.dim();
    if a == 0 || a > b {
        return None;
    }
    let mut shifts = Vec::with_capacity(m.r());
    for mat in m.mats() {
        let l = (0..b).find(|&i| !mat.get(i, 0).is_zero())? + 1;
        if l > b - a + 1 || shifted_identity(m.field(), b, a, l).ok()? != *mat || shifts.contains(&l) {
            return None;
        }
        shifts.push(l);
    }
    Some(shifts)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::kronecker::AlphaSampler;

    const Q: Field = Field::Rational;

    #[test]
    fn shifted_identities() {
        let m = shifted_identity(Q, 3, 1, 2).unwrap();
        assert_eq!(m, Matrix::from_i64(Q, &[&[0], &[1], &[0]]));
        assert_eq!(shifted_identity(Q, 4, 4, 1).unwrap(), Matrix::identity(Q, 4));
        assert_eq!(shifted_identity(Q, 7, 3, 5).unwrap().rank(), 3);
        assert!(shifted_identity(Q, 7, 3, 6).is_err());
        assert!(shifted_identity(Q, 7, 3, 0).is_err());
    }

    #[test]
    fn phi_examples() {
        let s = select_phi(3, 2, 4).unwrap();
        assert_eq!((s.case, s.phi.clone()), (EchelonCase::C, vec![1, 3, 2]));
        let s = select_phi(3, 3, 5).unwrap();
        assert_eq!((s.case, s.phi.clone()), (EchelonCase::B, vec![1, 3, 2]));
        let s = select_phi(4, 3, 8).unwrap();
        assert_eq!((s.case, s.phi.clone()), (EchelonCase::D, vec![1, 4, 6, 2]));
        let s = select_phi(5, 2, 6).unwrap();
        assert_eq!((s.case, s.phi), (EchelonCase::C, vec![1, 3, 5, 2, 4]));
        assert!(select_phi(3, 2, 5).is_err());
        assert!(select_phi(3, 1, 2).is_err());
    }

    #[test]
    fn case_coverage() {
        for r in 3..=5usize {
            for a in 2..=8usize {
                for b in a + r - 1..=(r - 1) * a {
                    if tits_form(r, DimVector::new(a, b)) > 0 {
                        continue;
                    }
                    let spec = select_phi(r, a, b).unwrap_or_else(|e| panic!("r={r} ({a},{b}): {e}"));
                    let m = build_echelon_rep(&spec, Q).unwrap();
                    assert_eq!(ekp_echelon_certificate(&m), Some(spec.phi.clone()));
                    for (i, mat) in m.mats().iter().enumerate() {
                        let mut e = vec![Q.zero(); r];
                        e[i] = Q.one();
                        assert_eq!(m.pencil(&e).unwrap(), *mat);
                        assert_eq!(mat.rank(), a);
                    }
                }
            }
        }
    }

    #[test]
    fn certificate_implies_injective_pencils() {
        let m = build_echelon_rep(&select_phi(4, 3, 8).unwrap(), Q).unwrap();
        let mut sampler = AlphaSampler::new(Q, 4, 7);
        for _ in 0..200 {
            assert!(m.pencil(&sampler.next_alpha()).unwrap().kernel_basis().is_empty());
        }
    }

    #[test]
    fn certificate_rejects() {
        let p2 = KroneckerRep::p2(3, Q).unwrap();
        assert_eq!(ekp_echelon_certificate(&p2), Some(vec![1, 2, 3]));
        let i = shifted_identity(Q, 4, 2, 1).unwrap();
        let twice = KroneckerRep::new(2, DimVector::new(2, 4), Q, vec![i.clone(), i]).unwrap();
        assert_eq!(ekp_echelon_certificate(&twice), None);
        let p1 = KroneckerRep::zero(3, DimVector::new(0, 1), Q).unwrap();
        assert_eq!(ekp_echelon_certificate(&p1), None);
    }
}
