//! Reflection functors on covering-tree representations and on the Kronecker
//! quiver, the inverse Auslander-Reiten translate built from them, the
//! Coxeter shift planner and preprojective constructions.

use alloc::collections::{BTreeMap, BTreeSet};
use alloc::format;
use alloc::vec::Vec;
use core::fmt;

use crate::cover::{Addr, Arrow, TreeQuiver, TreeRep};
use crate::exactmat::{Field, Matrix};
use crate::kronecker::{coxeter_apply, tits_form, DimVector, KroneckerRep};
use crate::{Error, Result};

/// Simple reflection of an integer vector on a tree quiver at `vertex`:
/// `x_v <- -x_v + sum of x_w over neighbors w` (absent coordinates are zero).
pub fn weyl_reflect(q: &TreeQuiver, v: &BTreeMap<Addr, i64>, vertex: &Addr) -> Result<BTreeMap<Addr, i64>> {
    if !q.contains(vertex) {
        return Err(Error::InvalidArgument(format!("{vertex} is not a vertex of the quiver")));
    }
    let at = |w: &Addr| v.get(w).copied().unwrap_or(0);
    let new = q.neighbors_in(vertex).map(|w| at(&w)).sum::<i64>() - at(vertex);
    let mut out = v.clone();
    out.insert(vertex.clone(), new);
    Ok(out)
}

/// The source reflection functor at `x`.
///
/// The new space at `x` is the cokernel of `h: M_x -> sum of M_y` over the
/// arrows `x -> y` (neighbors in address order), and each reversed arrow
/// `y -> x` is the corresponding column block of the cokernel projection.
pub fn reflect_functor_source(m: &TreeRep, x: &Addr) -> Result<TreeRep> {
    if !m.dims().contains_key(x) {
        return Err(Error::InvalidArgument(format!("{x} is not a vertex of the representation")));
    }
    if m.arrows().keys().any(|a| a.head == *x) {
        return Err(Error::Precondition(format!("{x} is not a source of the representation")));
    }
    let f = m.field();
    let out: Vec<(&Arrow, &Matrix)> = m.arrows().iter().filter(|(a, _)| a.tail == *x).collect();
    let h = Matrix::vstack(f, m.dim_at(x), &out.iter().map(|(_, map)| (*map).clone()).collect::<Vec<_>>())?;
    let p = h.cokernel_projection();
    let new_dim = p.rows();

    let mut arrows: BTreeMap<Arrow, Matrix> =
        m.arrows().iter().filter(|(a, _)| a.tail != *x).map(|(a, map)| (a.clone(), map.clone())).collect();
    let mut offset = 0;
    for (arrow, map) in &out {
        let block = p.submatrix(0, new_dim, offset, map.rows());
        offset += map.rows();
        arrows.insert(arrow.reversed(), block);
    }
    let mut dims = m.dims().clone();
    dims.insert(x.clone(), new_dim);
    TreeRep::new(m.r(), f, dims, arrows)
}

/// Inverse Auslander-Reiten translate on the covering tree.
///
/// Pads the representation with zero spaces so that every vertex whose
/// space can change, and all its neighbors, are present; then reflects at
/// every source, then at every (original) sink, and trims zeros. The
/// push-down dimension vector transforms by the inverse Coxeter matrix unless
/// the input has an injective summand, in which case it shrinks.
pub fn tau_inverse_tree(m: &TreeRep) -> Result<TreeRep> {
    if !m.is_standard_orientation() {
        return Err(Error::Precondition("tau inverse needs the bipartite source-to-sink orientation".into()));
    }
    let support = m.support();
    if support.is_empty() {
        return Err(Error::Precondition("tau inverse of the zero representation".into()));
    }
    let r = m.r();
    let mut frontier: BTreeSet<Addr> = BTreeSet::new();
    for v in &support {
        if v.is_source() {
            frontier.insert(v.clone());
        } else {
            frontier.extend(v.neighbors(r).map(|(_, w)| w));
        }
    }
    let mut working = frontier.clone();
    for _ in 0..2 {
        let ring: Vec<Addr> = working.iter().flat_map(|v| v.neighbors(r).map(|(_, w)| w)).collect();
        working.extend(ring);
    }

    let trimmed = m.trimmed();
    let f = m.field();
    let mut dims = trimmed.dims().clone();
    let mut arrows = trimmed.arrows().clone();
    for v in &working {
        dims.entry(v.clone()).or_insert(0);
    }
    for x in working.iter().filter(|v| v.is_source()) {
        for (_, y) in x.neighbors(r) {
            if dims.contains_key(&y) {
                let (rows, cols) = (dims[&y], dims[x]);
                arrows.entry(Arrow::new(x.clone(), y)).or_insert_with(|| Matrix::zeros(f, rows, cols));
            }
        }
    }
    let mut rep = TreeRep::new(r, f, dims, arrows)?;

    let sources: Vec<Addr> = working.iter().filter(|v| v.is_source()).cloned().collect();
    let sinks: Vec<Addr> = working.iter().filter(|v| v.is_sink() && frontier_adjacent(v, &frontier, r)).cloned().collect();
    for x in &sources {
        rep = reflect_functor_source(&rep, x)?;
    }
    for y in &sinks {
        rep = reflect_functor_source(&rep, y)?;
    }
    // Sinks that were never reflected keep their arrows pointing at them
    // from reflected sources; those sources all carry zero spaces, so the
    // arrows are dropped by the trim together with the zero vertices.
    let out = rep.trimmed();
    if out.support().is_empty() {
        return Err(Error::Precondition("tau inverse vanished: the input is injective".into()));
    }
    if !out.is_standard_orientation() {
        return Err(Error::Certificate("tau inverse left a non-standard arrow on the support".into()));
    }
    Ok(out)
}

fn frontier_adjacent(y: &Addr, frontier: &BTreeSet<Addr>, r: usize) -> bool {
    y.neighbors(r).any(|(_, w)| frontier.contains(&w))
}

/// Inverse Auslander-Reiten translate on the Kronecker quiver: the source
/// reflection at vertex 1 followed by the source reflection at vertex 2.
/// Sends a representation without injective summands of dimension `(a, b)`
/// to one of dimension `(rb - a, r(rb - a) - b)`.
pub fn tau_inverse_kronecker(m: &KroneckerRep) -> Result<KroneckerRep> {
    let f = m.field();
    let r = m.r();
    let DimVector { a, b } = m.dim();
    let h = Matrix::vstack(f, a, m.mats())?;
    let p = h.cokernel_projection();
    let n = p.rows();
    let blocks: Vec<Matrix> = (0..r).map(|i| p.submatrix(0, n, i * b, b)).collect();
    let g = Matrix::vstack(f, b, &blocks)?;
    let q = g.cokernel_projection();
    let k = q.rows();
    let mats = (0..r).map(|i| q.submatrix(0, k, i * n, n)).collect();
    KroneckerRep::new(r, DimVector::new(n, k), f, mats)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum WindowCase {
    /// `(r-1)u + 1 < v`: the intermediate comes from the covering builder.
    Cover,
    /// `v <= (r-1)u + 1`: the intermediate is a thin zigzag.
    Thin,
}

impl fmt::Display for WindowCase {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            WindowCase::Cover => "cover-case",
            WindowCase::Thin => "thin-case",
        })
    }
}

/// How to reach `(a, b)` from a dimension vector in the cover window.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct ReflectionPlan {
    pub l: u32,
    pub window_case: WindowCase,
    pub intermediate: DimVector,
}

pub const MAX_SHIFT: u32 = 64;

/// Finds the least `l >= 1` with `(u, v) = Phi^l (a, b)` satisfying
/// `u < v` and `(r-1)v <= (r^2-r-1)u`.
pub fn coxeter_shift_plan(r: usize, a: usize, b: usize) -> Result<ReflectionPlan> {
    let (ri, ai, bi) = (r as i128, a as i128, b as i128);
    if r < 2 || (ri - 1) * bi <= (ri * ri - ri - 1) * ai || tits_form(r, DimVector::new(a, b)) > 0 {
        return Err(Error::Precondition(format!(
            "({a},{b}) is not an imaginary root above the cover window for r = {r}"
        )));
    }
    let mut v = [ai, bi];
    for l in 1..=MAX_SHIFT {
        v = coxeter_apply(r, v, 1)?;
        let [u, w] = v;
        if u < 1 || w < 1 {
            break;
        }
        if u < w && (ri - 1) * w <= (ri * ri - ri - 1) * u {
            let window_case = if w <= (ri - 1) * u + 1 { WindowCase::Thin } else { WindowCase::Cover };
            return Ok(ReflectionPlan {
                l,
                window_case,
                intermediate: DimVector::from_int(v).expect("positive entries"),
            });
        }
    }
    Err(Error::Certificate(format!("no shift of ({a},{b}) within {MAX_SHIFT} steps reaches the window")))
}

/// The preprojective indecomposable of dimension `(a, b)` (a real root with
/// `a < b`), built from `P_1` or `P_2` by repeated inverse translates.
pub fn build_preprojective(r: usize, a: usize, b: usize, field: Field) -> Result<KroneckerRep> {
    let target = DimVector::new(a, b);
    if r < 2 || tits_form(r, target) != 1 || a >= b {
        return Err(Error::Precondition(format!("{target} is not a preprojective dimension vector for r = {r}")));
    }
    // Walk the chain (0,1), (1,r), ... until it reaches or passes the target.
    let (mut prev, mut cur) = ([0i128, 1], [1i128, r as i128]);
    let mut index = 1usize;
    let wanted = [a as i128, b as i128];
    while prev != wanted {
        if prev[1] > wanted[1] {
            return Err(Error::Precondition(format!("{target} is not on the preprojective chain for r = {r}")));
        }
        let next = [
            (r as i128).checked_mul(cur[0]).and_then(|x| x.checked_sub(prev[0])).ok_or(Error::Overflow("preprojective chain"))?,
            (r as i128).checked_mul(cur[1]).and_then(|x| x.checked_sub(prev[1])).ok_or(Error::Overflow("preprojective chain"))?,
        ];
        prev = cur;
        cur = next;
        index += 1;
    }
    let mut rep = if index % 2 == 1 {
        KroneckerRep::new(r, DimVector::new(0, 1), field, alloc::vec![Matrix::zeros(field, 1, 0); r])?
    } else {
        KroneckerRep::p2(r, field)?
    };
    for _ in 0..(index - 1) / 2 {
        rep = tau_inverse_kronecker(&rep)?;
    }
    if rep.dim() != target {
        return Err(Error::Certificate(format!("preprojective construction reached {} instead of {target}", rep.dim())));
    }
    Ok(rep)
}
