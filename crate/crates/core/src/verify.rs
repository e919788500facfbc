//! Certification: Hom and Ext between representations, endomorphism algebras,
//! indecomposability, sampled kernel/image checks and the restriction
//! predicates on generic Jordan types.

use alloc::format;
use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use crate::cover::TreeRep;
use crate::exactmat::{Field, Matrix, Scalar};
use crate::kronecker::{
    all_nonzero_alphas, generic_rank, is_constant_jordan_type, tits_form_int, AlphaSampler, DimVector, JordanType,
    KroneckerRep, SamplingRecord,
};
use crate::{Error, Result};

/// A basis of `Hom(M, N)`; each element is a pair `(f1: M_1 -> N_1, f2: M_2 -> N_2)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HomSpace {
    pub basis: Vec<(Matrix, Matrix)>,
}

impl HomSpace {
    pub fn dim(&self) -> usize {
        self.basis.len()
    }
}

/// Matrix of the map `(f1, f2) -> (f2 M_i - N_i f1)_i`.
///
/// Unknowns: `f1` row-major at `p * a_M + q`, then `f2` row-major at
/// `a_N a_M + p * b_M + q`. Equations: arrow-major, then row-major over
/// `b_N x a_M`.
fn intertwining_system(m: &KroneckerRep, n: &KroneckerRep) -> Result<Matrix> {
    if m.r() != n.r() {
        return Err(Error::InvalidArgument(format!("arrow counts differ: {} vs {}", m.r(), n.r())));
    }
    if m.field() != n.field() {
        return Err(Error::FieldMismatch(format!("{} vs {}", m.field(), n.field())));
    }
    let f = m.field();
    let DimVector { a: am, b: bm } = m.dim();
    let DimVector { a: an, b: bn } = n.dim();
    let cols = an * am + bn * bm;
    let rows = m.r() * bn * am;
    let mut sys = Matrix::zeros(f, rows, cols);
    for i in 0..m.r() {
        let (mi, ni) = (&m.mats()[i], &n.mats()[i]);
        for p in 0..bn {
            for q in 0..am {
                let row = (i * bn + p) * am + q;
                for k in 0..bm {
                    let v = mi.get(k, q);
                    if !v.is_zero() {
                        sys.set(row, an * am + p * bm + k, v.clone());
                    }
                }
                for k in 0..an {
                    let v = ni.get(p, k);
                    if !v.is_zero() {
                        sys.set(row, k * am + q, -v);
                    }
                }
            }
        }
    }
    Ok(sys)
}

pub fn hom_space(m: &KroneckerRep, n: &KroneckerRep) -> Result<HomSpace> {
    let sys = intertwining_system(m, n)?;
    let f = m.field();
    let DimVector { a: am, b: bm } = m.dim();
    let DimVector { a: an, b: bn } = n.dim();
    let split = an * am;
    let basis = sys
        .kernel_basis()
        .into_iter()
        .map(|v| {
            let f1 = Matrix::from_entries(f, an, am, v[..split].to_vec()).expect("sized");
            let f2 = Matrix::from_entries(f, bn, bm, v[split..].to_vec()).expect("sized");
            (f1, f2)
        })
        .collect();
    Ok(HomSpace { basis })
}

/// `dim Ext^1(M, N)`, the cokernel dimension of the intertwining map.
pub fn ext_dim(m: &KroneckerRep, n: &KroneckerRep) -> Result<usize> {
    let sys = intertwining_system(m, n)?;
    Ok(sys.rows() - sys.rank())
}

fn block_diag(f: Field, x: &Matrix, y: &Matrix) -> Matrix {
    let mut out = Matrix::zeros(f, x.rows() + y.rows(), x.cols() + y.cols());
    out.paste(0, 0, x);
    out.paste(x.rows(), x.cols(), y);
    out
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LocalityVerdict {
    pub local: bool,
    pub end_dim: usize,
    pub radical_dim: usize,
}

/// Whether `End(M)` has a one-dimensional semisimple quotient.
///
/// Over the rationals the Jacobson radical of a finite-dimensional algebra
/// is the kernel of the trace form `(x, y) -> tr(L_x L_y)` of its left regular
/// representation. Rational fields only.
pub fn end_is_local(m: &KroneckerRep) -> Result<LocalityVerdict> {
    let f = m.field();
    if f != Field::Rational {
        return Err(Error::Unsupported(format!("locality test over {f}; only the rationals are supported")));
    }
    let end = hom_space(m, m)?;
    let n = end.dim();
    if n <= 1 {
        return Ok(LocalityVerdict {
            local: n == 1,
            end_dim: n,
            radical_dim: 0,
        });
    }
    let elems: Vec<Matrix> = end.basis.iter().map(|(x, y)| block_diag(f, x, y)).collect();
    let len = elems[0].entries().len();
    // columns of `coords` are the flattened basis elements
    let mut coords = Matrix::zeros(f, len, n);
    for (k, e) in elems.iter().enumerate() {
        for (i, v) in e.entries().iter().enumerate() {
            coords.set(i, k, v.clone());
        }
    }
    let pivots = coords.transpose().rref().pivots;
    let square = Matrix::from_rows(f, n, pivots.iter().map(|&i| coords.row(i).to_vec()).collect())?;
    let inv = square.inverse()?.ok_or_else(|| Error::Certificate("endomorphism basis is dependent".into()))?;

    // left[i][(k, j)] = coefficient of e_k in e_i e_j
    let mut left = vec![Matrix::zeros(f, n, n); n];
    for (i, ei) in elems.iter().enumerate() {
        for (j, ej) in elems.iter().enumerate() {
            let prod = ei.mul(ej)?;
            let picked: Vec<Scalar> = pivots.iter().map(|&p| prod.entries()[p].clone()).collect();
            let c = inv.mul_vec(&picked)?;
            for (k, v) in c.into_iter().enumerate() {
                left[i].set(k, j, v);
            }
        }
    }
    let mut gram = Matrix::zeros(f, n, n);
    for i in 0..n {
        for j in i..n {
            let t = left[i].mul(&left[j])?.trace();
            gram.set(i, j, t.clone());
            gram.set(j, i, t);
        }
    }
    let radical_dim = n - gram.rank();
    Ok(LocalityVerdict {
        local: n - radical_dim == 1,
        end_dim: n,
        radical_dim,
    })
}

pub fn is_brick(m: &KroneckerRep) -> Result<bool> {
    Ok(hom_space(m, m)?.dim() == 1)
}

/// Exhaustive idempotent search in `End(M)` over a prime field.
///
/// `M` is indecomposable iff it is nonzero and `End(M)` has no idempotent
/// besides 0 and 1. Enumerates all `p^dim End` elements, so only small
/// algebras (at most 2^16 elements) are accepted.
pub fn indecomposable_over_prime_field(m: &KroneckerRep) -> Result<bool> {
    let Field::Prime(p) = m.field() else {
        return Err(Error::Unsupported("idempotent enumeration needs a finite field".into()));
    };
    if m.dim().is_zero() {
        return Ok(false);
    }
    let f = m.field();
    let end = hom_space(m, m)?;
    let n = end.dim();
    let total = p
        .checked_pow(n as u32)
        .filter(|&t| t <= 1 << 16)
        .ok_or_else(|| Error::Unsupported(format!("End has GF({p})-dimension {n}, too large to enumerate")))?;
    let elems: Vec<Matrix> = end.basis.iter().map(|(x, y)| block_diag(f, x, y)).collect();
    let size = m.dim().total();
    let id = Matrix::identity(f, size);
    for mut code in 1..total {
        let mut e = Matrix::zeros(f, size, size);
        for b in &elems {
            let c = code % p;
            code /= p;
            if c != 0 {
                e = e.add(&b.scale(&Scalar::Prime { value: c, p }))?;
            }
        }
        if e != id && e.mul(&e)? == e {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Outcome of a sampled kernel or image check.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SampleVerdict {
    pub holds: bool,
    pub record: SamplingRecord,
    /// A parameter at which the check failed.
    pub counterexample: Option<Vec<Scalar>>,
}

fn sample_rank_check(m: &KroneckerRep, samples: usize, seed: u64, want: usize) -> Result<SampleVerdict> {
    if samples == 0 {
        return Err(Error::InvalidArgument("at least one sample is required".into()));
    }
    let mut sampler = AlphaSampler::new(m.field(), m.r(), seed);
    let mut ranks = Vec::new();
    for _ in 0..samples {
        let alpha = sampler.next_alpha();
        let rank = m.pencil(&alpha)?.rank();
        if !ranks.contains(&rank) {
            ranks.push(rank);
        }
        if rank != want {
            ranks.sort_unstable();
            return Ok(SampleVerdict {
                holds: false,
                record: SamplingRecord { seed, samples, ranks_seen: ranks },
                counterexample: Some(alpha),
            });
        }
    }
    Ok(SampleVerdict {
        holds: true,
        record: SamplingRecord { seed, samples, ranks_seen: ranks },
        counterexample: None,
    })
}

/// Every sampled pencil is injective. Probabilistic.
pub fn ekp_sample_check(m: &KroneckerRep, samples: usize, seed: u64) -> Result<SampleVerdict> {
    sample_rank_check(m, samples, seed, m.dim().a)
}

/// Every sampled pencil is surjective. Probabilistic.
pub fn eip_sample_check(m: &KroneckerRep, samples: usize, seed: u64) -> Result<SampleVerdict> {
    sample_rank_check(m, samples, seed, m.dim().b)
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RestrictionVerdict {
    /// Sampled generic Jordan type `(c_M, d_M)`.
    pub generic: JordanType,
    /// `q(d_M, d_M + c_M)`.
    pub form_value: i128,
    /// Whether `c_M >= r - 1` was required (non-simple, constant Jordan type).
    pub c_bound_applies: bool,
    pub holds: bool,
}

/// Necessary conditions on an indecomposable `M`: `q(d_M, d_M + c_M) <= 1`,
/// and `c_M >= r - 1` when `M` is non-simple of constant Jordan type.
pub fn restriction_check(m: &KroneckerRep, samples: usize, seed: u64) -> Result<RestrictionVerdict> {
    let g = generic_rank(m, samples, seed)?;
    let r = m.r();
    let form_value = tits_form_int(r, g.d as i128, (g.d + g.c) as i128);
    let simple = m.dim() == DimVector::new(1, 0) || m.dim() == DimVector::new(0, 1);
    let c_bound_applies = !simple && samples >= 2 && is_constant_jordan_type(m, samples, seed)?.constant;
    let holds = form_value <= 1 && (!c_bound_applies || g.c + 1 >= r);
    Ok(RestrictionVerdict {
        generic: JordanType::new(g.c, g.d),
        form_value,
        c_bound_applies,
        holds,
    })
}

/// Result of enumerating every representation of a given dimension over a
/// small prime field.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SearchReport {
    pub examined: u64,
    /// Representations with the requested constant Jordan type and injective pencils.
    pub cjt_ekp: u64,
    /// Those among them that are indecomposable.
    pub indecomposable: Vec<KroneckerRep>,
}

/// Enumerates all `r`-tuples of `b x a` matrices over `GF(p)` and keeps those
/// that have constant Jordan type `jordan`, injective pencils at every
/// nonzero parameter, and no nontrivial idempotent endomorphism. Exact.
pub fn exhaustive_search(r: usize, dim: DimVector, jordan: JordanType, field: Field) -> Result<SearchReport> {
    let Field::Prime(p) = field else {
        return Err(Error::Unsupported("exhaustive search needs a finite field".into()));
    };
    let cells = r * dim.a * dim.b;
    let total = p
        .checked_pow(cells as u32)
        .filter(|&t| t <= 1 << 22)
        .ok_or_else(|| Error::Unsupported(format!("{cells} entries over GF({p}) is too many to enumerate")))?;
    let alphas = all_nonzero_alphas(field, r)?;
    let mut report = SearchReport {
        examined: 0,
        cjt_ekp: 0,
        indecomposable: Vec::new(),
    };
    for mut code in 0..total {
        let mut entries: Vec<Scalar> = Vec::with_capacity(cells);
        for _ in 0..cells {
            entries.push(Scalar::Prime { value: code % p, p });
            code /= p;
        }
        let per = dim.a * dim.b;
        let mats = entries
            .chunks(per.max(1))
            .take(r)
            .map(|c| Matrix::from_entries(field, dim.b, dim.a, c.to_vec()))
            .collect::<Result<Vec<_>>>()?;
        let mats = if per == 0 { vec![Matrix::zeros(field, dim.b, dim.a); r] } else { mats };
        let m = KroneckerRep::new(r, dim, field, mats)?;
        report.examined += 1;
        let mut ok = true;
        for alpha in &alphas {
            let rank = m.pencil(alpha)?.rank();
            if rank != jordan.d || rank != dim.a {
                ok = false;
                break;
            }
        }
        if !ok || dim.total() != jordan.dimension() {
            continue;
        }
        report.cjt_ekp += 1;
        if indecomposable_over_prime_field(&m)? {
            report.indecomposable.push(m);
        }
    }
    Ok(report)
}

/// How a witness's kernel property is certified.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum EkpCertificate {
    /// `M_1 = 0`: the kernel condition holds vacuously.
    Vacuous,
    /// Arrows are shifted identities with the given distinct shifts.
    Echelon { shifts: Vec<usize> },
    /// Push-down of a covering-tree representation whose maps are all injective.
    InjCover { tree: TreeRep },
    /// Only sampled.
    Sampled { samples: usize, seed: u64 },
}

impl EkpCertificate {
    pub fn kind(&self) -> &'static str {
        match self {
            EkpCertificate::Vacuous => "vacuous",
            EkpCertificate::Echelon { .. } => "echelon",
            EkpCertificate::InjCover { .. } => "inj-cover",
            EkpCertificate::Sampled { .. } => "sampled",
        }
    }

    pub fn is_exact(&self) -> bool {
        !matches!(self, EkpCertificate::Sampled { .. })
    }
}

/// How a witness's indecomposability is established.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum IndecEvidence {
    Brick,
    LocalEndo,
    CoverIndec,
}

impl fmt::Display for IndecEvidence {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            IndecEvidence::Brick => "brick",
            IndecEvidence::LocalEndo => "local-endo",
            IndecEvidence::CoverIndec => "cover-indec",
        })
    }
}

/// Which of the two dual properties the witness has.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Mode {
    Ekp,
    Eip,
}

impl fmt::Display for Mode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Mode::Ekp => "ekp",
            Mode::Eip => "eip",
        })
    }
}

/// A constructed representation with its evidence.
///
/// In [`Mode::Eip`] the certificate refers to the dual of `rep`, which is
/// the representation it was built from.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CertifiedWitness {
    pub rep: KroneckerRep,
    pub mode: Mode,
    pub jordan: JordanType,
    pub certificate: EkpCertificate,
    pub evidence: IndecEvidence,
    pub trace: Vec<String>,
}
