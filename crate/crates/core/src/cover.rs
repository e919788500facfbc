//! The universal covering tree of the Kronecker quiver and finite
//! representations on it.
//!
//! Vertices of the covering tree are addressed by reduced words over the arrow
//! colors `1..=r`, read from a fixed root source. Moving along color `c`
//! appends `c`, or deletes a trailing `c`. Words of even length are sources,
//! words of odd length are sinks, and the edge between `w` and `wc` covers
//! arrow `c` of the Kronecker quiver. Every vertex has exactly one neighbor
//! per color.

use alloc::collections::{BTreeMap, BTreeSet};
use alloc::format;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use crate::bgp::reflect_functor_source;
use crate::exactmat::{Field, Matrix};
use crate::kronecker::{DimVector, KroneckerRep};
use crate::{Error, Result};

/// Address of a vertex in the covering tree: a reduced color word.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct Addr(Vec<u16>);

impl Addr {
    pub fn root() -> Addr {
        Addr(Vec::new())
    }

    /// Validates that `colors` is a reduced word over `1..=r`.
    pub fn from_colors(r: usize, colors: &[usize]) -> Result<Addr> {
        for (i, &c) in colors.iter().enumerate() {
            if c == 0 || c > r {
                return Err(Error::InvalidArgument(format!("color {c} outside 1..={r}")));
            }
            if i > 0 && colors[i - 1] == c {
                return Err(Error::InvalidArgument(format!("address {colors:?} is not reduced")));
            }
        }
        Ok(Addr(colors.iter().map(|&c| c as u16).collect()))
    }

    pub fn colors(&self) -> impl Iterator<Item = usize> + '_ {
        self.0.iter().map(|&c| c as usize)
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn is_source(&self) -> bool {
        self.0.len() % 2 == 0
    }

    pub fn is_sink(&self) -> bool {
        !self.is_source()
    }

    /// The neighbor along color `c`.
    pub fn neighbor(&self, c: usize) -> Addr {
        let mut w = self.0.clone();
        if w.last() == Some(&(c as u16)) {
            w.pop();
        } else {
            w.push(c as u16);
        }
        Addr(w)
    }

    /// All `r` neighbors with the colors of the connecting edges.
    pub fn neighbors(&self, r: usize) -> impl Iterator<Item = (usize, Addr)> + '_ {
        (1..=r).map(move |c| (c, self.neighbor(c)))
    }

    /// Color of the edge joining `self` and `other`, if they are adjacent.
    pub fn edge_color(&self, other: &Addr) -> Option<usize> {
        let (short, long) = if self.0.len() < other.0.len() { (self, other) } else { (other, self) };
        (long.0.len() == short.0.len() + 1 && long.0.starts_with(&short.0)).then(|| *long.0.last().unwrap() as usize)
    }
}

impl fmt::Display for Addr {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for (i, c) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{c}")?;
        }
        write!(f, "]")
    }
}

/// An edge of the covering tree, always oriented source to sink.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct TreeEdge {
    pub source: Addr,
    pub sink: Addr,
    pub color: usize,
}

/// A finite full subquiver of the covering tree.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TreeQuiver {
    r: usize,
    vertices: BTreeSet<Addr>,
}

impl TreeQuiver {
    pub fn new(r: usize, vertices: BTreeSet<Addr>) -> Result<TreeQuiver> {
        if r < 2 {
            return Err(Error::InvalidArgument(format!("r = {r} must be at least 2")));
        }
        if let Some(v) = vertices.iter().find(|v| v.colors().any(|c| c == 0 || c > r)) {
            return Err(Error::InvalidArgument(format!("address {v} uses a color outside 1..={r}")));
        }
        Ok(TreeQuiver { r, vertices })
    }

    pub fn r(&self) -> usize {
        self.r
    }

    pub fn vertices(&self) -> &BTreeSet<Addr> {
        &self.vertices
    }

    pub fn contains(&self, v: &Addr) -> bool {
        self.vertices.contains(v)
    }

    pub fn sources(&self) -> impl Iterator<Item = &Addr> {
        self.vertices.iter().filter(|v| v.is_source())
    }

    pub fn sinks(&self) -> impl Iterator<Item = &Addr> {
        self.vertices.iter().filter(|v| v.is_sink())
    }

    /// Neighbors of `v` inside the subquiver.
    pub fn neighbors_in<'a>(&'a self, v: &'a Addr) -> impl Iterator<Item = Addr> + 'a {
        v.neighbors(self.r).map(|(_, w)| w).filter(|w| self.vertices.contains(w))
    }

    pub fn degree(&self, v: &Addr) -> usize {
        self.neighbors_in(v).count()
    }

    pub fn edges(&self) -> Vec<TreeEdge> {
        self.sources()
            .flat_map(|x| {
                x.neighbors(self.r)
                    .filter(|(_, y)| self.vertices.contains(y))
                    .map(move |(color, sink)| TreeEdge {
                        source: x.clone(),
                        sink,
                        color,
                    })
            })
            .collect()
    }

    pub fn is_connected(&self) -> bool {
        let Some(start) = self.vertices.first() else { return true };
        let mut seen = BTreeSet::from([start.clone()]);
        let mut stack = vec![start.clone()];
        while let Some(v) = stack.pop() {
            for w in self.neighbors_in(&v) {
                if seen.insert(w.clone()) {
                    stack.push(w);
                }
            }
        }
        seen.len() == self.vertices.len()
    }

    /// Every source keeps all `r` of its tree neighbors.
    pub fn is_source_regular(&self) -> bool {
        self.sources().all(|x| self.degree(x) == self.r)
    }

    fn without(&self, removed: &BTreeSet<Addr>) -> TreeQuiver {
        TreeQuiver {
            r: self.r,
            vertices: self.vertices.difference(removed).cloned().collect(),
        }
    }
}

/// Census of the sinks of a source-regular subquiver.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SinkCensus {
    /// Sinks with all `r` neighbors present, in address order.
    pub full: Vec<Addr>,
    /// Sinks whose degree is strictly between 1 and `r`, with that degree.
    pub intermediate: Vec<(Addr, usize)>,
    /// Sinks of degree one.
    pub leaves: usize,
}

pub fn sink_census(q: &TreeQuiver) -> SinkCensus {
    let mut census = SinkCensus {
        full: Vec::new(),
        intermediate: Vec::new(),
        leaves: 0,
    };
    for y in q.sinks() {
        match q.degree(y) {
            d if d == q.r => census.full.push(y.clone()),
            d if d <= 1 => census.leaves += 1,
            d => census.intermediate.push((y.clone(), d)),
        }
    }
    census
}

/// Grows a source-regular subquiver with `n` sources and at most one sink of
/// intermediate degree.
///
/// Starts from the star of the root source. Each step picks the unique
/// intermediate sink if there is one, otherwise the address-least leaf sink,
/// and adjoins its color-least missing source neighbor together with all of
/// that source's neighbors.
pub fn build_source_regular(r: usize, n: usize) -> Result<TreeQuiver> {
    if n < 1 {
        return Err(Error::InvalidArgument("a source-regular quiver needs at least one source".into()));
    }
    if r < 2 {
        return Err(Error::InvalidArgument(format!("r = {r} must be at least 2")));
    }
    let root = Addr::root();
    let mut vertices: BTreeSet<Addr> = root.neighbors(r).map(|(_, y)| y).collect();
    vertices.insert(root);
    let mut q = TreeQuiver { r, vertices };
    for _ in 1..n {
        let census = sink_census(&q);
        let y = match census.intermediate.first() {
            Some((y, _)) => y.clone(),
            None => q
                .sinks()
                .find(|y| q.degree(y) == 1)
                .cloned()
                .expect("a finite tree has leaf sinks"),
        };
        let x = y
            .neighbors(r)
            .map(|(_, x)| x)
            .find(|x| !q.contains(x))
            .expect("the chosen sink has a missing neighbor");
        let new: Vec<Addr> = x.neighbors(r).map(|(_, w)| w).collect();
        q.vertices.insert(x);
        q.vertices.extend(new);
    }
    Ok(q)
}

/// The dimension vector used for the window `(r-1)a + 1 <= b <= (r - 1/(r-1)) a`:
/// one at every source and ordinary sink, `1 + beta_i` at the distinguished
/// sinks (the full-degree ones, then the intermediate one).
///
/// The excess `b - (r-1)a - 1` is distributed greedily: each distinguished
/// sink in turn takes as much as its budget (`r-2` for full sinks, `s-1` for
/// the intermediate sink of degree `s+1`) allows.
pub fn build_root_vector(q: &TreeQuiver, a: usize, b: usize) -> Result<BTreeMap<Addr, usize>> {
    let r = q.r;
    let sources = q.sources().count();
    if sources != a || !q.is_source_regular() || !q.is_connected() {
        return Err(Error::Precondition(format!("quiver is not a connected source-regular quiver with {a} sources")));
    }
    let (a_i, b_i, r_i) = (a as i128, b as i128, r as i128);
    if b_i < (r_i - 1) * a_i + 1 || (r_i - 1) * b_i > (r_i * r_i - r_i - 1) * a_i {
        return Err(Error::Precondition(format!(
            "b = {b} is outside the window [(r-1)a+1, (r - 1/(r-1))a] for a = {a}, r = {r}"
        )));
    }
    let census = sink_census(q);
    if census.intermediate.len() > 1 {
        return Err(Error::Precondition("more than one sink of intermediate degree".into()));
    }
    let mut budgets: Vec<(Addr, usize)> = census.full.iter().map(|y| (y.clone(), r - 2)).collect();
    if let Some((y, deg)) = census.intermediate.first() {
        budgets.push((y.clone(), deg - 2));
    }
    let mut excess = b - (r - 1) * a - 1;
    let mut alpha: BTreeMap<Addr, usize> = q.vertices.iter().map(|v| (v.clone(), 1)).collect();
    for (y, budget) in budgets {
        let take = budget.min(excess);
        *alpha.get_mut(&y).unwrap() += take;
        excess -= take;
    }
    if excess != 0 {
        return Err(Error::Certificate(format!("budgets cannot absorb the excess ({excess} left)")));
    }
    Ok(alpha)
}

fn validate_root_hypotheses(q: &TreeQuiver, alpha: &BTreeMap<Addr, usize>) -> Result<()> {
    if !q.is_connected() || !q.is_source_regular() {
        return Err(Error::Precondition("quiver must be connected and source-regular".into()));
    }
    if alpha.keys().ne(q.vertices.iter()) {
        return Err(Error::Precondition("dimension vector must be given on exactly the quiver's vertices".into()));
    }
    for (v, &n) in alpha {
        let ok = if v.is_source() {
            n == 1
        } else {
            n >= 1 && n <= 1.max(q.degree(v).saturating_sub(1))
        };
        if !ok {
            return Err(Error::Precondition(format!("value {n} at {v} violates the root hypotheses")));
        }
    }
    Ok(())
}

/// Builds an indecomposable representation of the source-regular quiver `q`
/// with dimension vector `alpha` (one at sources, at most `max(1, deg - 1)`
/// at sinks).
///
/// Recursion on the number of sources: peel a source `x` whose neighbors are
/// leaves except for one sink `y`.
///
/// - If `alpha_y <= deg(y) - 2`, build the smaller representation and attach
///   `x` with identity maps to its leaves and the first basis vector into `y`.
/// - If `alpha_y = deg(y) - 1`, build the smaller representation with a
///   one-dimensional space at `y`, turn the arrows at `y` around (all spaces
///   there are one-dimensional, so this is a transpose of scalars) and apply
///   the source reflection functors at `x`, `y` and the leaves.
///
/// Every map of the result is injective.
pub fn build_indecomposable_tree_rep(q: &TreeQuiver, alpha: &BTreeMap<Addr, usize>) -> Result<TreeRep> {
    validate_root_hypotheses(q, alpha)?;
    build_rec(q, alpha)
}

fn build_rec(q: &TreeQuiver, alpha: &BTreeMap<Addr, usize>) -> Result<TreeRep> {
    let f = Field::Rational;
    let r = q.r;
    let sources: Vec<&Addr> = q.sources().collect();
    if sources.len() == 1 {
        let x = sources[0];
        let mut dims = BTreeMap::from([(x.clone(), 1)]);
        let mut arrows = BTreeMap::new();
        for (_, y) in x.neighbors(r) {
            dims.insert(y.clone(), 1);
            arrows.insert(Arrow::new(x.clone(), y), Matrix::identity(f, 1));
        }
        return TreeRep::new(r, f, dims, arrows);
    }

    let (x, y) = sources
        .iter()
        .rev()
        .find_map(|x| {
            let mut inner = q.neighbors_in(x).filter(|w| q.degree(w) > 1);
            match (inner.next(), inner.next()) {
                (Some(y), None) => Some(((*x).clone(), y)),
                _ => None,
            }
        })
        .ok_or_else(|| Error::Precondition("no peelable source; quiver is not a tree".into()))?;
    let leaves: Vec<Addr> = q.neighbors_in(&x).filter(|w| *w != y).collect();
    let mut removed: BTreeSet<Addr> = leaves.iter().cloned().collect();
    removed.insert(x.clone());
    let smaller = q.without(&removed);
    let mut sub_alpha: BTreeMap<Addr, usize> =
        alpha.iter().filter(|(v, _)| !removed.contains(*v)).map(|(v, n)| (v.clone(), *n)).collect();

    let deg_y = q.degree(&y);
    let alpha_y = alpha[&y];
    if alpha_y + 1 == deg_y {
        sub_alpha.insert(y.clone(), 1);
        let inner = build_rec(&smaller, &sub_alpha)?;
        lift_by_reflection(inner, &x, &y, &leaves, alpha_y)
    } else {
        let inner = build_rec(&smaller, &sub_alpha)?;
        let mut dims = inner.dims.clone();
        let mut arrows = inner.arrows.clone();
        dims.insert(x.clone(), 1);
        for leaf in &leaves {
            dims.insert(leaf.clone(), 1);
            arrows.insert(Arrow::new(x.clone(), leaf.clone()), Matrix::identity(f, 1));
        }
        let mut into_y = Matrix::zeros(f, alpha_y, 1);
        into_y.set(0, 0, f.one());
        arrows.insert(Arrow::new(x, y), into_y);
        TreeRep::new(r, f, dims, arrows)
    }
}

fn lift_by_reflection(inner: TreeRep, x: &Addr, y: &Addr, leaves: &[Addr], target_y: usize) -> Result<TreeRep> {
    let f = inner.field;
    if inner.dim_at(y) != 1 {
        return Err(Error::Certificate(format!("expected a one-dimensional space at {y}")));
    }
    let mut arrows = BTreeMap::new();
    for (arrow, m) in inner.arrows {
        if arrow.head == *y {
            if m.shape() != (1, 1) {
                return Err(Error::Certificate(format!("arrow into {y} is not between one-dimensional spaces")));
            }
            arrows.insert(Arrow::new(y.clone(), arrow.tail), m.transpose());
        } else {
            arrows.insert(arrow, m);
        }
    }
    let mut dims = inner.dims;
    dims.insert(x.clone(), 0);
    arrows.insert(Arrow::new(x.clone(), y.clone()), Matrix::zeros(f, 1, 0));
    for leaf in leaves {
        dims.insert(leaf.clone(), 0);
        arrows.insert(Arrow::new(x.clone(), leaf.clone()), Matrix::zeros(f, 0, 0));
    }
    let mut rep = TreeRep::new(inner.r, f, dims, arrows)?;
    rep = reflect_functor_source(&rep, x)?;
    rep = reflect_functor_source(&rep, y)?;
    for leaf in leaves {
        rep = reflect_functor_source(&rep, leaf)?;
    }
    if rep.dim_at(x) != 1 || rep.dim_at(y) != target_y || leaves.iter().any(|l| rep.dim_at(l) != 1) {
        return Err(Error::Certificate("reflection lift produced the wrong dimension vector".into()));
    }
    Ok(rep)
}

/// Thin representation on a zigzag `x_1 -> y_1 <- x_2 -> y_2 <- ... x_u -> y_u`
/// (arrows `x_i -> y_i` cover color 1, `x_{i+1} -> y_i` cover color 2) plus
/// `v - u` further sinks adjacent to the `x_i`, all maps identities.
///
/// Extra sinks are taken in order of the source index, then color.
pub fn thin_path_rep(r: usize, u: usize, v: usize) -> Result<TreeRep> {
    if r < 2 {
        return Err(Error::InvalidArgument(format!("r = {r} must be at least 2")));
    }
    if u == 0 || v < u || v > (r - 1) * u + 1 {
        return Err(Error::InvalidArgument(format!("need 1 <= u <= v <= (r-1)u+1, got u = {u}, v = {v}")));
    }
    let f = Field::Rational;
    let mut path_sources = vec![Addr::root()];
    let mut path_sinks = Vec::new();
    for i in 0..u {
        let y = path_sources[i].neighbor(1);
        if i + 1 < u {
            path_sources.push(y.neighbor(2));
        }
        path_sinks.push(y);
    }
    let mut sinks: BTreeSet<Addr> = path_sinks.iter().cloned().collect();
    let mut extra = v - u;
    'outer: for x in &path_sources {
        for (_, y) in x.neighbors(r) {
            if extra == 0 {
                break 'outer;
            }
            if sinks.insert(y) {
                extra -= 1;
            }
        }
    }
    let mut dims: BTreeMap<Addr, usize> = path_sources.iter().map(|x| (x.clone(), 1)).collect();
    dims.extend(sinks.iter().map(|y| (y.clone(), 1)));
    let mut arrows = BTreeMap::new();
    for x in &path_sources {
        for (_, y) in x.neighbors(r) {
            if sinks.contains(&y) {
                arrows.insert(Arrow::new(x.clone(), y), Matrix::identity(f, 1));
            }
        }
    }
    TreeRep::new(r, f, dims, arrows)
}

/// A directed arrow between adjacent tree vertices. Reflection functors turn
/// arrows around, so the orientation is stored explicitly.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Arrow {
    pub tail: Addr,
    pub head: Addr,
}

impl Arrow {
    pub fn new(tail: Addr, head: Addr) -> Arrow {
        Arrow { tail, head }
    }

    pub fn reversed(&self) -> Arrow {
        Arrow::new(self.head.clone(), self.tail.clone())
    }
}

/// A finite-dimensional representation of a finite full subquiver of the
/// covering tree.
///
/// Every pair of adjacent vertices in `dims` carries exactly one arrow, of
/// shape `dim(head) x dim(tail)`. Vertices may have dimension zero.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TreeRep {
    r: usize,
    field: Field,
    dims: BTreeMap<Addr, usize>,
    arrows: BTreeMap<Arrow, Matrix>,
}

impl TreeRep {
    pub fn new(r: usize, field: Field, dims: BTreeMap<Addr, usize>, arrows: BTreeMap<Arrow, Matrix>) -> Result<TreeRep> {
        if r < 2 {
            return Err(Error::InvalidArgument(format!("r = {r} must be at least 2")));
        }
        for (arrow, m) in &arrows {
            let (Some(&dt), Some(&dh)) = (dims.get(&arrow.tail), dims.get(&arrow.head)) else {
                return Err(Error::InvalidArgument(format!(
                    "arrow {} -> {} has an endpoint without a space",
                    arrow.tail, arrow.head
                )));
            };
            if arrow.tail.edge_color(&arrow.head).is_none() {
                return Err(Error::InvalidArgument(format!("{} and {} are not adjacent", arrow.tail, arrow.head)));
            }
            if arrow.tail.colors().chain(arrow.head.colors()).any(|c| c > r) {
                return Err(Error::InvalidArgument(format!("arrow {} -> {} leaves the tree for r = {r}", arrow.tail, arrow.head)));
            }
            if arrows.contains_key(&arrow.reversed()) {
                return Err(Error::InvalidArgument(format!("edge {} - {} carries two arrows", arrow.tail, arrow.head)));
            }
            if m.shape() != (dh, dt) {
                return Err(Error::DimensionMismatch(format!(
                    "map {} -> {} is {}x{}, expected {dh}x{dt}",
                    arrow.tail,
                    arrow.head,
                    m.rows(),
                    m.cols()
                )));
            }
            if m.field() != field {
                return Err(Error::FieldMismatch(format!("map over {}, rep over {field}", m.field())));
            }
        }
        for v in dims.keys() {
            for (_, w) in v.neighbors(r) {
                if v < &w
                    && dims.contains_key(&w)
                    && !arrows.contains_key(&Arrow::new(v.clone(), w.clone()))
                    && !arrows.contains_key(&Arrow::new(w.clone(), v.clone()))
                {
                    return Err(Error::InvalidArgument(format!("edge {v} - {w} has no arrow")));
                }
            }
        }
        Ok(TreeRep { r, field, dims, arrows })
    }

    pub fn r(&self) -> usize {
        self.r
    }

    pub fn field(&self) -> Field {
        self.field
    }

    pub fn dims(&self) -> &BTreeMap<Addr, usize> {
        &self.dims
    }

    pub fn arrows(&self) -> &BTreeMap<Arrow, Matrix> {
        &self.arrows
    }

    pub fn dim_at(&self, v: &Addr) -> usize {
        self.dims.get(v).copied().unwrap_or(0)
    }

    pub fn quiver(&self) -> TreeQuiver {
        TreeQuiver {
            r: self.r,
            vertices: self.dims.keys().cloned().collect(),
        }
    }

    pub fn support(&self) -> BTreeSet<Addr> {
        self.dims.iter().filter(|(_, &n)| n > 0).map(|(v, _)| v.clone()).collect()
    }

    /// Every arrow runs from a source-class vertex to a sink-class vertex.
    pub fn is_standard_orientation(&self) -> bool {
        self.arrows.keys().all(|a| a.tail.is_source())
    }

    /// Drops zero-dimensional vertices and the arrows touching them.
    pub fn trimmed(&self) -> TreeRep {
        let dims: BTreeMap<Addr, usize> = self.dims.iter().filter(|(_, &n)| n > 0).map(|(v, n)| (v.clone(), *n)).collect();
        let arrows = self
            .arrows
            .iter()
            .filter(|(a, _)| dims.contains_key(&a.tail) && dims.contains_key(&a.head))
            .map(|(a, m)| (a.clone(), m.clone()))
            .collect();
        TreeRep {
            r: self.r,
            field: self.field,
            dims,
            arrows,
        }
    }

    /// `(sum of source dimensions, sum of sink dimensions)`.
    pub fn push_down_dim(&self) -> DimVector {
        let mut d = DimVector::new(0, 0);
        for (v, &n) in &self.dims {
            if v.is_source() {
                d.a += n;
            } else {
                d.b += n;
            }
        }
        d
    }

    /// The map on the tree edge from source `x` to sink `y`; `None` if the
    /// edge is not part of the quiver.
    pub fn edge_map(&self, x: &Addr, y: &Addr) -> Option<&Matrix> {
        self.arrows.get(&Arrow::new(x.clone(), y.clone()))
    }
}

/// Folds a standard-orientation tree representation onto the Kronecker
/// quiver: `M_1` is the sum of the source spaces, `M_2` the sum of the sink
/// spaces (both in address order), arrow `i` collects the color-`i` maps.
pub fn push_down(m: &TreeRep) -> Result<KroneckerRep> {
    if !m.is_standard_orientation() {
        return Err(Error::InvalidArgument("push-down needs every arrow oriented source to sink".into()));
    }
    let f = m.field;
    let mut src_off = BTreeMap::new();
    let mut sink_off = BTreeMap::new();
    let (mut a, mut b) = (0, 0);
    for (v, &n) in &m.dims {
        if v.is_source() {
            src_off.insert(v, a);
            a += n;
        } else {
            sink_off.insert(v, b);
            b += n;
        }
    }
    let mut mats = vec![Matrix::zeros(f, b, a); m.r];
    for (arrow, map) in &m.arrows {
        let color = arrow.tail.edge_color(&arrow.head).expect("validated adjacency");
        mats[color - 1].paste(sink_off[&arrow.head], src_off[&arrow.tail], map);
    }
    KroneckerRep::new(m.r, DimVector::new(a, b), f, mats)
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct InjVerdict {
    pub holds: bool,
    /// An edge of the covering tree whose map has a kernel.
    pub witness: Option<TreeEdge>,
}

/// Whether every arrow of the covering tree carries an injective map.
///
/// Edges leaving the quiver count: a nonzero source space next to a missing
/// (zero) sink fails. This is an exact, finite test; for indecomposable `m` it
/// is equivalent to the equal kernels property of the push-down.
pub fn is_inj(m: &TreeRep) -> Result<InjVerdict> {
    if !m.is_standard_orientation() {
        return Err(Error::InvalidArgument("injectivity test needs standard orientation".into()));
    }
    for (x, &n) in &m.dims {
        if !x.is_source() || n == 0 {
            continue;
        }
        for (color, y) in x.neighbors(m.r) {
            let injective = m.edge_map(x, &y).is_some_and(|map| map.rank() == n);
            if !injective {
                return Ok(InjVerdict {
                    holds: false,
                    witness: Some(TreeEdge {
                        source: x.clone(),
                        sink: y,
                        color,
                    }),
                });
            }
        }
    }
    Ok(InjVerdict {
        holds: true,
        witness: None,
    })
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BoundCheck {
    /// Whether the injectivity precondition held.
    pub precondition_ok: bool,
    /// `b - (r-1)a - max source dimension` on the push-down.
    pub slack: i128,
    pub holds: bool,
}

/// The lower bound `b >= (r-1)a + max_x dim M_x` for representations with all
/// maps injective. A failed precondition is reported, not asserted.
pub fn source_regular_bound_check(m: &TreeRep) -> Result<BoundCheck> {
    let precondition_ok = is_inj(m)?.holds;
    let d = m.push_down_dim();
    let max_source = m.dims.iter().filter(|(v, _)| v.is_source()).map(|(_, &n)| n).max().unwrap_or(0);
    let slack = d.b as i128 - (m.r as i128 - 1) * d.a as i128 - max_source as i128;
    Ok(BoundCheck {
        precondition_ok,
        slack,
        holds: slack >= 0,
    })
}
