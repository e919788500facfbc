//! Representations of the `r`-Kronecker quiver and their numerical invariants.
//!
//! A representation is a pair of spaces `k^a`, `k^b` with `r` linear maps
//! `k^a -> k^b`, stored as `b x a` matrices acting on column vectors. The
//! module also carries the integer side of the theory: the Tits and Euler
//! forms, the Coxeter matrix, root classification and the preprojective and
//! preinjective dimension-vector chains.

use alloc::collections::BTreeSet;
use alloc::format;
use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::exactmat::{Field, Matrix, Scalar};
use crate::{Error, Result};

/// Dimension vector `(dim M_1, dim M_2)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct DimVector {
    pub a: usize,
    pub b: usize,
}

impl DimVector {
    pub const fn new(a: usize, b: usize) -> DimVector {
        DimVector { a, b }
    }

    pub fn total(self) -> usize {
        self.a + self.b
    }

    pub fn is_zero(self) -> bool {
        self.a == 0 && self.b == 0
    }

    fn as_int(self) -> [i128; 2] {
        [self.a as i128, self.b as i128]
    }

    /// Converts a raw integer vector back, failing on negative entries.
    pub fn from_int(v: [i128; 2]) -> Option<DimVector> {
        Some(DimVector::new(usize::try_from(v[0]).ok()?, usize::try_from(v[1]).ok()?))
    }
}

impl fmt::Display for DimVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{})", self.a, self.b)
    }
}

/// Jordan type `[1]^c [2]^d` of a nilpotent operator of degree at most two.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct JordanType {
    pub c: usize,
    pub d: usize,
}

impl JordanType {
    pub const fn new(c: usize, d: usize) -> JordanType {
        JordanType { c, d }
    }

    /// Total dimension `c + 2d` of the module the type describes.
    pub fn dimension(self) -> usize {
        self.c + 2 * self.d
    }
}

impl fmt::Display for JordanType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[1]^{}[2]^{}", self.c, self.d)
    }
}

// ---------------------------------------------------------------------------
// Quadratic forms and the Coxeter matrix

/// `x^2 + y^2 - r x y` on raw integers.
pub fn tits_form_int(r: usize, x: i128, y: i128) -> i128 {
    x * x + y * y - r as i128 * x * y
}

/// Tits form `q(a, b) = a^2 + b^2 - r a b`.
pub fn tits_form(r: usize, v: DimVector) -> i128 {
    let [x, y] = v.as_int();
    tits_form_int(r, x, y)
}

/// Euler form `<x, y> = x_1 y_1 + x_2 y_2 - r x_1 y_2`.
pub fn euler_form(r: usize, x: DimVector, y: DimVector) -> i128 {
    let [x1, x2] = x.as_int();
    let [y1, y2] = y.as_int();
    x1 * y1 + x2 * y2 - r as i128 * x1 * y2
}

/// The Coxeter matrix `[[r^2-1, -r], [r, -1]]`.
pub fn coxeter_matrix(r: usize) -> [[i128; 2]; 2] {
    let r = r as i128;
    [[r * r - 1, -r], [r, -1]]
}

/// Its exact integer inverse `[[-1, r], [-r, r^2-1]]`.
pub fn coxeter_inverse_matrix(r: usize) -> [[i128; 2]; 2] {
    let r = r as i128;
    [[-1, r], [-r, r * r - 1]]
}

fn apply_checked(m: &[[i128; 2]; 2], v: [i128; 2]) -> Result<[i128; 2]> {
    let row = |i: usize| {
        m[i][0]
            .checked_mul(v[0])
            .and_then(|x| m[i][1].checked_mul(v[1]).and_then(|y| x.checked_add(y)))
            .ok_or(Error::Overflow("coxeter_apply"))
    };
    Ok([row(0)?, row(1)?])
}

/// `Phi^power * v`; negative powers use the inverse matrix. Entries may come
/// out negative, callers decide what that means.
pub fn coxeter_apply(r: usize, v: [i128; 2], power: i64) -> Result<[i128; 2]> {
    let m = if power >= 0 { coxeter_matrix(r) } else { coxeter_inverse_matrix(r) };
    let mut out = v;
    for _ in 0..power.unsigned_abs() {
        out = apply_checked(&m, out)?;
    }
    Ok(out)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum RootKind {
    NotARoot,
    Real,
    Imaginary,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum RootPosition {
    Preprojective,
    Preinjective,
    Regular,
    Simple,
    NotApplicable,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct RootClass {
    pub kind: RootKind,
    pub position: RootPosition,
}

impl fmt::Display for RootKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            RootKind::NotARoot => "not-a-root",
            RootKind::Real => "real",
            RootKind::Imaginary => "imaginary",
        })
    }
}

impl fmt::Display for RootPosition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            RootPosition::Preprojective => "preprojective",
            RootPosition::Preinjective => "preinjective",
            RootPosition::Regular => "regular",
            RootPosition::Simple => "simple",
            RootPosition::NotApplicable => "n/a",
        })
    }
}

/// Positive roots of the Kronecker quiver: `q = 1` real, `q <= 0` imaginary.
pub fn classify_root(r: usize, v: DimVector) -> Result<RootClass> {
    if v.is_zero() {
        return Err(Error::InvalidArgument("the zero vector is not a root".into()));
    }
    let q = tits_form(r, v);
    Ok(if q > 1 {
        RootClass {
            kind: RootKind::NotARoot,
            position: RootPosition::NotApplicable,
        }
    } else if q == 1 {
        let position = if v == DimVector::new(1, 0) || v == DimVector::new(0, 1) {
            RootPosition::Simple
        } else if v.a < v.b {
            RootPosition::Preprojective
        } else {
            RootPosition::Preinjective
        };
        RootClass {
            kind: RootKind::Real,
            position,
        }
    } else {
        RootClass {
            kind: RootKind::Imaginary,
            position: RootPosition::Regular,
        }
    })
}

fn chain(r: usize, first: DimVector, second: DimVector, limit: usize) -> Vec<DimVector> {
    let mut out = Vec::new();
    let (mut prev, mut cur) = (first, second);
    if first.a.max(first.b) > limit {
        return out;
    }
    out.push(first);
    while cur.a.max(cur.b) <= limit {
        out.push(cur);
        // X_{i+2} = r X_{i+1} - X_i
        let next = DimVector::new(r * cur.a - prev.a, r * cur.b - prev.b);
        prev = cur;
        cur = next;
    }
    out
}

/// Dimension vectors of `P_1, P_2, ...` while both components stay `<= limit`.
pub fn preprojective_dim_vectors(r: usize, limit: usize) -> Vec<DimVector> {
    chain(r, DimVector::new(0, 1), DimVector::new(1, r), limit)
}

/// Dimension vectors of `I_1, I_2, ...` while both components stay `<= limit`.
pub fn preinjective_dim_vectors(r: usize, limit: usize) -> Vec<DimVector> {
    chain(r, DimVector::new(1, 0), DimVector::new(r, 1), limit)
}

// ---------------------------------------------------------------------------
// Jordan types and the admissible set

/// `(c, d) -> (d, d + c)`.
pub fn xi(t: JordanType) -> DimVector {
    DimVector::new(t.d, t.d + t.c)
}

/// `(a, b) -> (b - a, a)`, defined for `b >= a`.
pub fn xi_inverse(v: DimVector) -> Result<JordanType> {
    if v.b < v.a {
        return Err(Error::InvalidArgument(format!("{v} has b < a")));
    }
    Ok(JordanType::new(v.b - v.a, v.a))
}

/// The clause of the admissibility test that a pair failed.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum IjtClause {
    CPositive,
    DPositive,
    FormAtMostOne,
    CAtLeastRMinusOne,
}

impl fmt::Display for IjtClause {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            IjtClause::CPositive => "c >= 1",
            IjtClause::DPositive => "d >= 1",
            IjtClause::FormAtMostOne => "q(d,d+c) <= 1",
            IjtClause::CAtLeastRMinusOne => "c >= r-1",
        })
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct IjtVerdict {
    pub member: bool,
    pub failed: Option<IjtClause>,
}

/// Membership of `(c, d)` in the set of Jordan types of indecomposable
/// Loewy-length-two representations: `c, d >= 1`, `q(d, d+c) <= 1` and
/// `c >= r - 1`. Integer arithmetic only.
pub fn is_in_ijt(r: usize, t: JordanType) -> IjtVerdict {
    let failed = if t.c < 1 {
        Some(IjtClause::CPositive)
    } else if t.d < 1 {
        Some(IjtClause::DPositive)
    } else if tits_form(r, xi(t)) > 1 {
        Some(IjtClause::FormAtMostOne)
    } else if t.c + 1 < r {
        Some(IjtClause::CAtLeastRMinusOne)
    } else {
        None
    };
    IjtVerdict {
        member: failed.is_none(),
        failed,
    }
}

// ---------------------------------------------------------------------------
// Representations

/// A representation of the `r`-Kronecker quiver: `r` matrices of shape `b x a`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct KroneckerRep {
    r: usize,
    dim: DimVector,
    field: Field,
    mats: Vec<Matrix>,
}

impl KroneckerRep {
    pub fn new(r: usize, dim: DimVector, field: Field, mats: Vec<Matrix>) -> Result<KroneckerRep> {
        if r < 2 {
            return Err(Error::InvalidArgument(format!("arrow count r = {r} must be at least 2")));
        }
        if mats.len() != r {
            return Err(Error::DimensionMismatch(format!("{} matrices for r = {r}", mats.len())));
        }
        for (i, m) in mats.iter().enumerate() {
            if m.shape() != (dim.b, dim.a) {
                return Err(Error::DimensionMismatch(format!(
                    "matrix {} is {}x{}, expected {}x{}",
                    i + 1,
                    m.rows(),
                    m.cols(),
                    dim.b,
                    dim.a
                )));
            }
            if m.field() != field {
                return Err(Error::FieldMismatch(format!("matrix {} over {}, rep over {field}", i + 1, m.field())));
            }
        }
        Ok(KroneckerRep { r, dim, field, mats })
    }

    /// All maps zero.
    pub fn zero(r: usize, dim: DimVector, field: Field) -> Result<KroneckerRep> {
        KroneckerRep::new(r, dim, field, vec![Matrix::zeros(field, dim.b, dim.a); r])
    }

    /// The projective `P_2` of dimension `(1, r)`: arrow `i` picks the `i`-th
    /// standard basis vector of `k^r`.
    pub fn p2(r: usize, field: Field) -> Result<KroneckerRep> {
        let mats = (0..r)
            .map(|i| {
                let mut m = Matrix::zeros(field, r, 1);
                m.set(i, 0, field.one());
                m
            })
            .collect();
        KroneckerRep::new(r, DimVector::new(1, r), field, mats)
    }

    pub fn r(&self) -> usize {
        self.r
    }

    pub fn dim(&self) -> DimVector {
        self.dim
    }

    pub fn field(&self) -> Field {
        self.field
    }

    pub fn mats(&self) -> &[Matrix] {
        &self.mats
    }

    /// `M^alpha = sum alpha_i M(gamma_i)`.
    pub fn pencil(&self, alpha: &[Scalar]) -> Result<Matrix> {
        if alpha.len() != self.r {
            return Err(Error::DimensionMismatch(format!("alpha of length {} for r = {}", alpha.len(), self.r)));
        }
        if alpha.iter().all(Scalar::is_zero) {
            return Err(Error::ZeroAlpha);
        }
        let mut out = Matrix::zeros(self.field, self.dim.b, self.dim.a);
        for (x, m) in alpha.iter().zip(&self.mats) {
            if x.field() != self.field {
                return Err(Error::FieldMismatch(format!("alpha over {}, rep over {}", x.field(), self.field)));
            }
            if !x.is_zero() {
                out = out.add(&m.scale(x))?;
            }
        }
        Ok(out)
    }

    /// Jordan type of the operator `sum alpha_i x_i`: `d = rank M^alpha`,
    /// `c = a + b - 2d`.
    pub fn jordan_type_at(&self, alpha: &[Scalar]) -> Result<JordanType> {
        let d = self.pencil(alpha)?.rank();
        Ok(JordanType::new(self.dim.total() - 2 * d, d))
    }

    /// Dual representation: spaces swapped, every map transposed.
    pub fn dual(&self) -> KroneckerRep {
        KroneckerRep {
            r: self.r,
            dim: DimVector::new(self.dim.b, self.dim.a),
            field: self.field,
            mats: self.mats.iter().map(Matrix::transpose).collect(),
        }
    }

    /// Block-diagonal direct sum.
    pub fn direct_sum(&self, other: &KroneckerRep) -> Result<KroneckerRep> {
        if self.r != other.r {
            return Err(Error::InvalidArgument(format!("arrow counts {} and {} differ", self.r, other.r)));
        }
        if self.field != other.field {
            return Err(Error::FieldMismatch(format!("{} vs {}", self.field, other.field)));
        }
        let f = self.field;
        let mats = self
            .mats
            .iter()
            .zip(&other.mats)
            .map(|(x, y)| {
                Matrix::block(
                    f,
                    &[
                        vec![x.clone(), Matrix::zeros(f, x.rows(), y.cols())],
                        vec![Matrix::zeros(f, y.rows(), x.cols()), y.clone()],
                    ],
                )
            })
            .collect::<Result<Vec<_>>>()?;
        KroneckerRep::new(
            self.r,
            DimVector::new(self.dim.a + other.dim.a, self.dim.b + other.dim.b),
            f,
            mats,
        )
    }

    /// The `r` nilpotent operators on `M_1 + M_2` of the associated module:
    /// `x_i` sends `m_1 + m_2` to `M(gamma_i)(m_1)`. In the basis of `M_1`
    /// followed by `M_2` each is `[[0, 0], [M(gamma_i), 0]]`.
    pub fn to_module_operators(&self) -> Vec<Matrix> {
        let n = self.dim.total();
        self.mats
            .iter()
            .map(|m| {
                let mut x = Matrix::zeros(self.field, n, n);
                x.paste(self.dim.a, 0, m);
                x
            })
            .collect()
    }
}

// ---------------------------------------------------------------------------
// Sampling

/// Seeded source of pencil parameters.
///
/// Over the rationals entries are uniform integers in `[-999, 999]`, over a
/// prime field uniform residues; the zero vector is rejected.
pub struct AlphaSampler {
    rng: ChaCha8Rng,
    field: Field,
    r: usize,
}

impl AlphaSampler {
    pub fn new(field: Field, r: usize, seed: u64) -> AlphaSampler {
        AlphaSampler {
            rng: ChaCha8Rng::seed_from_u64(seed),
            field,
            r,
        }
    }

    pub fn next_alpha(&mut self) -> Vec<Scalar> {
        loop {
            let alpha: Vec<Scalar> = (0..self.r)
                .map(|_| match self.field {
                    Field::Rational => self.field.from_i64(self.rng.gen_range(-999..=999)),
                    Field::Prime(p) => Scalar::Prime {
                        value: self.rng.gen_range(0..p),
                        p,
                    },
                })
                .collect();
            if alpha.iter().any(|x| !x.is_zero()) {
                return alpha;
            }
        }
    }
}

/// Every nonzero `alpha` in `GF(p)^r`, in lexicographic order of residues.
pub fn all_nonzero_alphas(field: Field, r: usize) -> Result<Vec<Vec<Scalar>>> {
    let Field::Prime(p) = field else {
        return Err(Error::Unsupported("alpha enumeration needs a finite field".into()));
    };
    let total = p.checked_pow(r as u32).filter(|&t| t <= 1 << 20).ok_or_else(|| {
        Error::Unsupported(format!("GF({p})^{r} is too large to enumerate"))
    })?;
    Ok((1..total)
        .map(|mut code| {
            let mut v = Vec::with_capacity(r);
            for _ in 0..r {
                v.push(Scalar::Prime { value: code % p, p });
                code /= p;
            }
            v.reverse();
            v
        })
        .collect())
}

/// Seed and outcome of a sampling run.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SamplingRecord {
    pub seed: u64,
    pub samples: usize,
    /// Distinct pencil ranks observed, ascending.
    pub ranks_seen: Vec<usize>,
}

/// Sampled generic rank `d_M` and `c_M = dim M - 2 d_M`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GenericRank {
    pub d: usize,
    pub c: usize,
    pub record: SamplingRecord,
}

fn sample_ranks(m: &KroneckerRep, samples: usize, seed: u64) -> Result<SamplingRecord> {
    let mut sampler = AlphaSampler::new(m.field, m.r, seed);
    let mut seen = BTreeSet::new();
    for _ in 0..samples {
        seen.insert(m.pencil(&sampler.next_alpha())?.rank());
    }
    Ok(SamplingRecord {
        seed,
        samples,
        ranks_seen: seen.into_iter().collect(),
    })
}

/// The maximal pencil rank over `samples` seeded parameters.
///
/// This is always a lower bound for the generic rank and equals it with
/// overwhelming probability over the rationals, since the maximum is attained
/// on a dense open set of parameters.
pub fn generic_rank(m: &KroneckerRep, samples: usize, seed: u64) -> Result<GenericRank> {
    if samples == 0 {
        return Err(Error::InvalidArgument("at least one sample is required".into()));
    }
    let record = sample_ranks(m, samples, seed)?;
    let d = *record.ranks_seen.last().expect("samples >= 1");
    Ok(GenericRank {
        d,
        c: m.dim.total() - 2 * d,
        record,
    })
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CjtVerdict {
    pub constant: bool,
    /// The common Jordan type when all sampled ranks agree.
    pub jordan: Option<JordanType>,
    pub record: SamplingRecord,
}

/// Sampling test for constant Jordan type: every sampled pencil has the same rank.
pub fn is_constant_jordan_type(m: &KroneckerRep, samples: usize, seed: u64) -> Result<CjtVerdict> {
    if samples < 2 {
        return Err(Error::InvalidArgument("constant Jordan type needs at least two samples".into()));
    }
    let record = sample_ranks(m, samples, seed)?;
    let jordan = match record.ranks_seen.as_slice() {
        [d] => Some(JordanType::new(m.dim.total() - 2 * d, *d)),
        _ => None,
    };
    Ok(CjtVerdict {
        constant: jordan.is_some(),
        jordan,
        record,
    })
}

/// Human-readable one-liner used in traces.
pub fn describe(m: &KroneckerRep) -> String {
    format!("r={} dim={} over {}", m.r, m.dim, m.field)
}

#[cfg(test)]
mod tests {
    use super::*;

    const Q: Field = Field::Rational;

    fn unit(r: usize, i: usize) -> Vec<Scalar> {
        (0..r).map(|j| Q.from_i64((i == j) as i64)).collect()
    }

    #[test]
    fn tits_form_examples() {
        for r in 2..8 {
            assert_eq!(tits_form(r, DimVector::new(1, r)), 1);
            assert_eq!(tits_form(r, DimVector::new(2, 2 * r)), 4);
        }
        for a in 0..20 {
            assert_eq!(tits_form(2, DimVector::new(a, a)), 0);
        }
    }

    #[test]
    fn euler_form_examples() {
        for r in 2..8 {
            let x = DimVector::new(1, r - 1);
            let y = DimVector::new(r - 1, 1);
            assert_eq!(euler_form(r, x, y), r as i128 - 2);
            assert_eq!(euler_form(r, DimVector::new(1, 0), DimVector::new(1, 0)), 1);
            assert_eq!(euler_form(r, DimVector::new(1, 0), DimVector::new(0, 1)), -(r as i128));
        }
    }

    #[test]
    fn coxeter_examples() {
        assert_eq!(coxeter_apply(3, [2, 5], 1).unwrap(), [1, 1]);
        assert_eq!(coxeter_apply(4, [7, 9], 0).unwrap(), [7, 9]);
        // [[-1,3],[-3,8]] * (1,2) = (5, 13)
        assert_eq!(coxeter_apply(3, [1, 2], -1).unwrap(), [5, 13]);
        assert!(coxeter_apply(3, [1, 2], -200).is_err());
    }

    #[test]
    fn root_classes() {
        for r in 2..6 {
            let c = classify_root(r, DimVector::new(1, r)).unwrap();
            assert_eq!((c.kind, c.position), (RootKind::Real, RootPosition::Preprojective));
        }
        let c = classify_root(3, DimVector::new(2, 5)).unwrap();
        assert_eq!((c.kind, c.position), (RootKind::Imaginary, RootPosition::Regular));
        assert_eq!(classify_root(3, DimVector::new(1, 5)).unwrap().kind, RootKind::NotARoot);
        assert_eq!(classify_root(3, DimVector::new(0, 1)).unwrap().position, RootPosition::Simple);
        assert_eq!(classify_root(3, DimVector::new(3, 1)).unwrap().position, RootPosition::Preinjective);
        assert!(classify_root(3, DimVector::new(0, 0)).is_err());
    }

    #[test]
    fn pencil_of_p2_is_the_parameter_column() {
        let p2 = KroneckerRep::p2(3, Q).unwrap();
        assert_eq!(p2.pencil(&unit(3, 0)).unwrap(), p2.mats()[0]);
        let alpha = [Q.from_i64(4), Q.from_i64(-1), Q.from_i64(7)];
        assert_eq!(p2.pencil(&alpha).unwrap(), Matrix::column(Q, &alpha));
        assert_eq!(p2.pencil(&[Q.zero(), Q.zero(), Q.zero()]), Err(Error::ZeroAlpha));
    }

    #[test]
    fn jordan_types() {
        let r = 4;
        let p2 = KroneckerRep::p2(r, Q).unwrap();
        let mut s = AlphaSampler::new(Q, r, 7);
        for _ in 0..20 {
            let alpha = s.next_alpha();
            assert_eq!(p2.jordan_type_at(&alpha).unwrap(), JordanType::new(r - 1, 1));
            let sum = p2.direct_sum(&p2).unwrap();
            assert_eq!(sum.jordan_type_at(&alpha).unwrap(), JordanType::new(2 * (r - 1), 2));
            assert_eq!(p2.dual().jordan_type_at(&alpha).unwrap(), JordanType::new(r - 1, 1));
        }
        let s1 = KroneckerRep::zero(r, DimVector::new(1, 0), Q).unwrap();
        assert_eq!(s1.jordan_type_at(&unit(r, 0)).unwrap(), JordanType::new(1, 0));
    }

    #[test]
    fn generic_rank_examples() {
        let p2 = KroneckerRep::p2(3, Q).unwrap();
        let g = generic_rank(&p2, 10, 1).unwrap();
        assert_eq!((g.d, g.c), (1, 2));
        let s = KroneckerRep::zero(3, DimVector::new(1, 0), Q).unwrap();
        let g = generic_rank(&s, 5, 1).unwrap();
        assert_eq!((g.d, g.c), (0, 1));
    }

    #[test]
    fn constant_jordan_type_examples() {
        let r = 3;
        let p2 = KroneckerRep::p2(r, Q).unwrap();
        let v = is_constant_jordan_type(&p2.direct_sum(&p2).unwrap(), 30, 5).unwrap();
        assert!(v.constant);
        assert_eq!(v.jordan, Some(JordanType::new(2 * r - 2, 2)));

        // (I_1, 0, 0) on (1,1): rank 1 at e_1, rank 0 at e_2
        let mut mats = vec![Matrix::zeros(Q, 1, 1); r];
        mats[0] = Matrix::identity(Q, 1);
        let m = KroneckerRep::new(r, DimVector::new(1, 1), Q, mats).unwrap();
        assert_eq!(m.jordan_type_at(&unit(r, 0)).unwrap().d, 1);
        assert_eq!(m.jordan_type_at(&unit(r, 1)).unwrap().d, 0);

        let s = KroneckerRep::zero(r, DimVector::new(0, 1), Q).unwrap();
        let v = is_constant_jordan_type(&s, 5, 0).unwrap();
        assert_eq!(v.jordan, Some(JordanType::new(1, 0)));
    }

    #[test]
    fn duality() {
        let p1 = KroneckerRep::zero(3, DimVector::new(0, 1), Q).unwrap();
        assert_eq!(p1.dual().dim(), DimVector::new(1, 0));
        let p2 = KroneckerRep::p2(3, Q).unwrap();
        assert_eq!(p2.dual().dual(), p2);
    }

    #[test]
    fn ijt_examples() {
        for r in 2..7 {
            assert!(is_in_ijt(r, JordanType::new(r - 1, 1)).member);
        }
        let v = is_in_ijt(2, JordanType::new(0, 2));
        assert!(!v.member);
        assert_eq!(v.failed, Some(IjtClause::CPositive));
        assert!(is_in_ijt(3, JordanType::new(3, 2)).member);
        assert_eq!(is_in_ijt(3, JordanType::new(1, 1)).failed, Some(IjtClause::CAtLeastRMinusOne));
    }

    #[test]
    fn xi_examples() {
        assert_eq!(xi(JordanType::new(3, 2)), DimVector::new(2, 5));
        assert_eq!(xi(JordanType::new(1, 0)), DimVector::new(0, 1));
        assert!(xi_inverse(DimVector::new(3, 2)).is_err());
        for c in 0..10 {
            for d in 0..10 {
                let t = JordanType::new(c, d);
                assert_eq!(xi_inverse(xi(t)).unwrap(), t);
            }
        }
    }

    #[test]
    fn module_operators() {
        let p2 = KroneckerRep::p2(3, Q).unwrap();
        let xs = p2.to_module_operators();
        for x in &xs {
            for y in &xs {
                assert!(x.mul(y).unwrap().is_zero());
            }
        }
        let alpha = [Q.from_i64(2), Q.from_i64(0), Q.from_i64(-5)];
        let op = xs.iter().zip(&alpha).fold(Matrix::zeros(Q, 4, 4), |acc, (x, s)| acc.add(&x.scale(s)).unwrap());
        assert_eq!(op.rank(), 1);
        let s = KroneckerRep::zero(3, DimVector::new(1, 0), Q).unwrap();
        assert!(s.to_module_operators().iter().all(|x| x.shape() == (1, 1) && x.is_zero()));
    }

    #[test]
    fn dimension_vector_chains() {
        let p = preprojective_dim_vectors(3, 21);
        assert_eq!(
            p,
            [DimVector::new(0, 1), DimVector::new(1, 3), DimVector::new(3, 8), DimVector::new(8, 21)]
        );
        let p = preprojective_dim_vectors(2, 4);
        assert_eq!(
            p,
            [DimVector::new(0, 1), DimVector::new(1, 2), DimVector::new(2, 3), DimVector::new(3, 4)]
        );
        for r in 2..6 {
            for v in preprojective_dim_vectors(r, 1000) {
                assert_eq!(tits_form(r, v), 1);
                assert!(v.a < v.b);
            }
            for v in preinjective_dim_vectors(r, 1000) {
                assert_eq!(tits_form(r, v), 1);
                assert!(v.a > v.b);
            }
        }
    }

    #[test]
    fn enumerate_gf2_alphas() {
        let f = Field::prime(2).unwrap();
        let all = all_nonzero_alphas(f, 3).unwrap();
        assert_eq!(all.len(), 7);
        assert!(all_nonzero_alphas(Q, 3).is_err());
    }
}
