//! Twisted graded free modules, their homogeneous elements, degree-0 maps
//! between them, and chain complexes of such maps.
//!
//! A free module is just its list of twists: generator `e_i` of
//! `⊕ S(-t_i)` has degree `t_i`. Elements are stored sorted under the
//! position-over-term order; the Schreyer order used during syzygy
//! computation only changes which term counts as leading, never the storage.

use std::cmp::Ordering;
use std::sync::Arc;

use crate::arith::{degrevlex, Monomial, MonomialOrder, Polynomial, RingContext};
use crate::error::AlgebraError;

/// A graded free module `⊕_i S(-twists[i])`. Rank 0 is the zero module.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GradedFreeModule {
    twists: Vec<i64>,
}

impl GradedFreeModule {
    pub fn new(twists: Vec<i64>) -> Self {
        GradedFreeModule { twists }
    }

    pub fn zero() -> Self {
        GradedFreeModule { twists: Vec::new() }
    }

    pub fn rank_one() -> Self {
        GradedFreeModule { twists: vec![0] }
    }

    pub fn rank(&self) -> usize {
        self.twists.len()
    }

    pub fn twists(&self) -> &[i64] {
        &self.twists
    }

    pub fn twist(&self, i: usize) -> i64 {
        self.twists[i]
    }

    /// All twists shifted by `s` (the module `M(-s)` convention: generator
    /// degrees move from `t` to `t + s`).
    pub fn shifted(&self, s: i64) -> GradedFreeModule {
        GradedFreeModule {
            twists: self.twists.iter().map(|t| t + s).collect(),
        }
    }

    pub fn dual(&self) -> GradedFreeModule {
        GradedFreeModule {
            twists: self.twists.iter().map(|t| -t).collect(),
        }
    }
}

/// One term of a module element: coordinate, monomial, coefficient.
pub type ModuleTerm = (usize, Monomial, u64);

/// Position-over-term comparison: a smaller coordinate index wins, ties are
/// broken by the monomial order. This is the canonical storage order.
pub fn pot_cmp(a: &(usize, Monomial), b: &(usize, Monomial)) -> Ordering {
    match a.0.cmp(&b.0) {
        Ordering::Less => Ordering::Greater,
        Ordering::Greater => Ordering::Less,
        Ordering::Equal => degrevlex(&a.1, &b.1, MonomialOrder::DegRevLex),
    }
}

/// Module monomial order: the default position-over-term order, or the
/// Schreyer order induced by a Groebner basis. Schreyer orders nest as the
/// syzygy tower grows.
#[derive(Clone, Debug)]
pub enum ModuleOrder {
    Pot,
    Schreyer(Arc<SchreyerOrder>),
}

/// (coordinate, monomial) image under the basis matrix of every generator,
/// plus the order of the target module the images live in.
#[derive(Clone, Debug)]
pub struct SchreyerOrder {
    pub images: Vec<(usize, Monomial)>,
    pub base: ModuleOrder,
}

impl ModuleOrder {
    /// Compare two module monomials `(coord, monomial)`.
    pub fn cmp_terms(&self, a: &(usize, Monomial), b: &(usize, Monomial)) -> Ordering {
        match self {
            ModuleOrder::Pot => pot_cmp(a, b),
            ModuleOrder::Schreyer(s) => {
                let (ca, ma) = &s.images[a.0];
                let (cb, mb) = &s.images[b.0];
                let ia = (*ca, a.1.mul(ma));
                let ib = (*cb, b.1.mul(mb));
                match s.base.cmp_terms(&ia, &ib) {
                    // image tie: the smaller basis index is greater
                    Ordering::Equal => b.0.cmp(&a.0),
                    ord => ord,
                }
            }
        }
    }
}

/// A sparse homogeneous element of a graded free module. Terms are sorted
/// strictly descending under position-over-term, zero- and duplicate-free.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ModuleElement {
    terms: Vec<ModuleTerm>,
}

impl ModuleElement {
    pub fn zero() -> Self {
        ModuleElement { terms: Vec::new() }
    }

    /// Normalizing constructor; checks coordinates against the module rank
    /// and homogeneity against its twists.
    pub fn from_terms(
        ring: &RingContext,
        module: &GradedFreeModule,
        mut terms: Vec<ModuleTerm>,
    ) -> Result<Self, AlgebraError> {
        for (i, m, _) in &terms {
            if *i >= module.rank() {
                return Err(AlgebraError::CoordOutOfRange {
                    coord: *i,
                    rank: module.rank(),
                });
            }
            if m.nvars() != ring.num_vars() {
                return Err(AlgebraError::VarCountMismatch {
                    left: m.nvars(),
                    right: ring.num_vars(),
                });
            }
        }
        terms.sort_by(|a, b| pot_cmp(&(b.0, b.1.clone()), &(a.0, a.1.clone())));
        let mut merged: Vec<ModuleTerm> = Vec::with_capacity(terms.len());
        for (i, m, c) in terms {
            let c = c % ring.field().characteristic();
            if let Some(last) = merged.last_mut() {
                if last.0 == i && last.1 == m {
                    last.2 = ring.field().add(last.2, c);
                    continue;
                }
            }
            merged.push((i, m, c));
        }
        merged.retain(|(_, _, c)| *c != 0);
        let v = ModuleElement { terms: merged };
        if let Some(d) = v.degree(module) {
            for (i, m, _) in &v.terms {
                let td = m.degree() as i64 + module.twist(*i);
                if td != d {
                    return Err(AlgebraError::NotHomogeneous);
                }
            }
        }
        Ok(v)
    }

    /// Sort-only constructor for terms already known to be valid (distinct,
    /// nonzero, from a homogeneous source). Used by the division algorithm.
    pub(crate) fn from_terms_unchecked(mut terms: Vec<ModuleTerm>) -> Self {
        terms.sort_by(|a, b| pot_cmp(&(b.0, b.1.clone()), &(a.0, a.1.clone())));
        ModuleElement { terms }
    }

    /// The basis vector `e_i`.
    pub fn basis_vector(ring: &RingContext, module: &GradedFreeModule, i: usize) -> Self {
        assert!(i < module.rank());
        ModuleElement {
            terms: vec![(i, Monomial::one(ring.num_vars()), 1)],
        }
    }

    /// A polynomial placed in coordinate `i`.
    pub fn from_polynomial(poly: &Polynomial, i: usize) -> Self {
        ModuleElement {
            terms: poly
                .terms()
                .iter()
                .map(|(m, c)| (i, m.clone(), *c))
                .collect(),
        }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> &[ModuleTerm] {
        &self.terms
    }

    pub fn degree(&self, module: &GradedFreeModule) -> Option<i64> {
        self.terms
            .first()
            .map(|(i, m, _)| m.degree() as i64 + module.twist(*i))
    }

    /// Leading term under the given module order (linear scan).
    pub fn lead(&self, order: &ModuleOrder) -> Option<&ModuleTerm> {
        self.lead_index(order).map(|i| &self.terms[i])
    }

    pub fn lead_index(&self, order: &ModuleOrder) -> Option<usize> {
        match order {
            ModuleOrder::Pot => {
                if self.terms.is_empty() {
                    None
                } else {
                    Some(0)
                }
            }
            _ => (0..self.terms.len()).max_by(|&a, &b| {
                order.cmp_terms(
                    &(self.terms[a].0, self.terms[a].1.clone()),
                    &(self.terms[b].0, self.terms[b].1.clone()),
                )
            }),
        }
    }

    /// Copy with the term at `idx` removed. Order of the rest is preserved.
    pub(crate) fn without_term_at(&self, idx: usize) -> ModuleElement {
        let mut terms = self.terms.clone();
        terms.remove(idx);
        ModuleElement { terms }
    }

    pub fn add(&self, ring: &RingContext, other: &ModuleElement) -> ModuleElement {
        ModuleElement {
            terms: merge_module_terms(
                ring,
                self.terms.iter().cloned(),
                other.terms.iter().cloned(),
            ),
        }
    }

    /// `self - c * m * other`: the module reduction step.
    pub fn combine(
        &self,
        ring: &RingContext,
        other: &ModuleElement,
        c: u64,
        m: &Monomial,
    ) -> ModuleElement {
        let scaled = other
            .terms
            .iter()
            .map(|(i, tm, tc)| (*i, tm.mul(m), ring.field().neg(ring.field().mul(*tc, c))));
        ModuleElement {
            terms: merge_module_terms(ring, self.terms.iter().cloned(), scaled),
        }
    }

    pub fn scale(&self, ring: &RingContext, c: u64) -> ModuleElement {
        if c == 0 {
            return ModuleElement::zero();
        }
        ModuleElement {
            terms: self
                .terms
                .iter()
                .map(|(i, m, k)| (*i, m.clone(), ring.field().mul(*k, c)))
                .collect(),
        }
    }

    pub fn mul_term(&self, ring: &RingContext, m: &Monomial, c: u64) -> ModuleElement {
        if c == 0 {
            return ModuleElement::zero();
        }
        ModuleElement {
            terms: self
                .terms
                .iter()
                .map(|(i, tm, tc)| (*i, tm.mul(m), ring.field().mul(*tc, c)))
                .collect(),
        }
    }

    /// The polynomial sitting in coordinate `i`.
    pub fn coordinate(&self, ring: &RingContext, i: usize) -> Polynomial {
        let terms = self
            .terms
            .iter()
            .filter(|(j, _, _)| *j == i)
            .map(|(_, m, c)| (m.clone(), *c))
            .collect();
        Polynomial::from_terms(ring, terms).expect("slice of homogeneous element")
    }

    /// Coordinates present in this element, ascending and deduplicated.
    pub fn support(&self) -> Vec<usize> {
        let mut coords: Vec<usize> = self.terms.iter().map(|(i, _, _)| *i).collect();
        coords.sort_unstable();
        coords.dedup();
        coords
    }

    /// Remap coordinates; terms whose coordinate maps to `None` are dropped.
    /// The result is re-sorted since the map need not be monotone.
    pub fn remap_coords(&self, f: impl Fn(usize) -> Option<usize>) -> ModuleElement {
        let mut terms: Vec<ModuleTerm> = self
            .terms
            .iter()
            .filter_map(|(i, m, c)| f(*i).map(|j| (j, m.clone(), *c)))
            .collect();
        terms.sort_by(|a, b| pot_cmp(&(b.0, b.1.clone()), &(a.0, a.1.clone())));
        ModuleElement { terms }
    }

    /// View over a larger ring (new trailing variables, exponent 0).
    pub fn extend(&self, nvars: usize) -> ModuleElement {
        ModuleElement {
            terms: self
                .terms
                .iter()
                .map(|(i, m, c)| (*i, m.extend(nvars), *c))
                .collect(),
        }
    }

    pub fn is_normalized(&self) -> bool {
        if self.terms.iter().any(|(_, _, c)| *c == 0) {
            return false;
        }
        self.terms.windows(2).all(|w| {
            pot_cmp(&(w[0].0, w[0].1.clone()), &(w[1].0, w[1].1.clone())) == Ordering::Greater
        })
    }
}

fn merge_module_terms<I, J>(ring: &RingContext, a: I, b: J) -> Vec<ModuleTerm>
where
    I: Iterator<Item = ModuleTerm>,
    J: Iterator<Item = ModuleTerm>,
{
    let field = ring.field();
    let mut a = a.peekable();
    let mut b = b.peekable();
    let mut out = Vec::new();
    loop {
        let take_a = match (a.peek(), b.peek()) {
            (None, None) => break,
            (Some(_), None) => true,
            (None, Some(_)) => false,
            (Some(ta), Some(tb)) => match pot_cmp(&(ta.0, ta.1.clone()), &(tb.0, tb.1.clone())) {
                Ordering::Greater => true,
                Ordering::Less => false,
                Ordering::Equal => {
                    let (i, m, ca) = a.next().unwrap();
                    let (_, _, cb) = b.next().unwrap();
                    let c = field.add(ca, cb);
                    if c != 0 {
                        out.push((i, m, c));
                    }
                    continue;
                }
            },
        };
        let t = if take_a {
            a.next().unwrap()
        } else {
            b.next().unwrap()
        };
        if t.2 != 0 {
            out.push(t);
        }
    }
    out
}

/// A degree-0 homogeneous map between graded free modules, stored
/// column-sparse: one element of the target per source generator.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GradedMatrix {
    pub source: GradedFreeModule,
    pub target: GradedFreeModule,
    cols: Vec<ModuleElement>,
}

impl GradedMatrix {
    /// Validating constructor: column `j` must be homogeneous of degree
    /// `source.twists[j]` (zero columns are allowed under any twist).
    pub fn new(
        ring: &RingContext,
        source: GradedFreeModule,
        target: GradedFreeModule,
        cols: Vec<ModuleElement>,
    ) -> Result<Self, AlgebraError> {
        if cols.len() != source.rank() {
            return Err(AlgebraError::CoordOutOfRange {
                coord: cols.len(),
                rank: source.rank(),
            });
        }
        for (j, col) in cols.iter().enumerate() {
            for (i, m, _) in col.terms() {
                if *i >= target.rank() {
                    return Err(AlgebraError::CoordOutOfRange {
                        coord: *i,
                        rank: target.rank(),
                    });
                }
                let d = m.degree() as i64 + target.twist(*i);
                if d != source.twist(j) {
                    return Err(AlgebraError::DegreeMismatch {
                        expected: source.twist(j),
                        found: d,
                    });
                }
                if m.nvars() != ring.num_vars() {
                    return Err(AlgebraError::VarCountMismatch {
                        left: m.nvars(),
                        right: ring.num_vars(),
                    });
                }
            }
        }
        Ok(GradedMatrix {
            source,
            target,
            cols,
        })
    }

    pub fn zero(source: GradedFreeModule, target: GradedFreeModule) -> Self {
        let cols = vec![ModuleElement::zero(); source.rank()];
        GradedMatrix {
            source,
            target,
            cols,
        }
    }

    pub fn identity(ring: &RingContext, module: &GradedFreeModule) -> Self {
        let cols = (0..module.rank())
            .map(|i| ModuleElement::basis_vector(ring, module, i))
            .collect();
        GradedMatrix {
            source: module.clone(),
            target: module.clone(),
            cols,
        }
    }

    pub fn columns(&self) -> &[ModuleElement] {
        &self.cols
    }

    pub fn is_zero(&self) -> bool {
        self.cols.iter().all(|c| c.is_zero())
    }

    /// The polynomial entry at `(row, col)`.
    pub fn entry(&self, ring: &RingContext, row: usize, col: usize) -> Polynomial {
        self.cols[col].coordinate(ring, row)
    }

    /// Image of an element of the source.
    pub fn apply(
        &self,
        ring: &RingContext,
        v: &ModuleElement,
    ) -> Result<ModuleElement, AlgebraError> {
        let mut image = ModuleElement::zero();
        for (j, m, c) in v.terms() {
            if *j >= self.source.rank() {
                return Err(AlgebraError::CoordOutOfRange {
                    coord: *j,
                    rank: self.source.rank(),
                });
            }
            image = image.add(ring, &self.cols[*j].mul_term(ring, m, *c));
        }
        Ok(image)
    }

    /// Matrix composition `self ∘ other` (apply `other` first).
    pub fn compose(
        &self,
        ring: &RingContext,
        other: &GradedMatrix,
    ) -> Result<GradedMatrix, AlgebraError> {
        if other.target.twists() != self.source.twists() {
            return Err(AlgebraError::NotComposable { position: 0 });
        }
        let cols = other
            .cols
            .iter()
            .map(|c| self.apply(ring, c))
            .collect::<Result<Vec<_>, _>>()?;
        Ok(GradedMatrix {
            source: other.source.clone(),
            target: self.target.clone(),
            cols,
        })
    }

    /// Transpose with negated twists (the dual map).
    pub fn transpose(&self) -> GradedMatrix {
        let mut cols = vec![Vec::new(); self.target.rank()];
        for (j, col) in self.cols.iter().enumerate() {
            for (i, m, c) in col.terms() {
                cols[*i].push((j, m.clone(), *c));
            }
        }
        let cols = cols
            .into_iter()
            .map(|mut terms| {
                terms.sort_by(|a: &ModuleTerm, b: &ModuleTerm| {
                    pot_cmp(&(b.0, b.1.clone()), &(a.0, a.1.clone()))
                });
                ModuleElement { terms }
            })
            .collect();
        GradedMatrix {
            source: self.target.dual(),
            target: self.source.dual(),
            cols,
        }
    }

    pub fn shifted(&self, s: i64) -> GradedMatrix {
        GradedMatrix {
            source: self.source.shifted(s),
            target: self.target.shifted(s),
            cols: self.cols.clone(),
        }
    }

    /// View over a larger ring.
    pub fn extend(&self, nvars: usize) -> GradedMatrix {
        GradedMatrix {
            source: self.source.clone(),
            target: self.target.clone(),
            cols: self.cols.iter().map(|c| c.extend(nvars)).collect(),
        }
    }
}

/// A chain of degree-0 maps `F_0 <- F_1 <- F_2 <- ...`; `maps[i]` is the
/// differential `F_{i+1} -> F_i`. An empty map list is the complex `0 -> F_0`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Complex {
    f0: GradedFreeModule,
    maps: Vec<GradedMatrix>,
}

impl Complex {
    /// Validating constructor: adjacent sources and targets must agree.
    pub fn new(f0: GradedFreeModule, maps: Vec<GradedMatrix>) -> Result<Self, AlgebraError> {
        let c = Complex { f0, maps };
        if let Some(pos) = c.first_shape_defect() {
            return Err(AlgebraError::NotComposable { position: pos });
        }
        Ok(c)
    }

    /// Constructor without shape validation, for building deliberately
    /// broken chains in tests.
    pub fn new_unchecked(f0: GradedFreeModule, maps: Vec<GradedMatrix>) -> Self {
        Complex { f0, maps }
    }

    fn first_shape_defect(&self) -> Option<usize> {
        if let Some(first) = self.maps.first() {
            if first.target.twists() != self.f0.twists() {
                return Some(1);
            }
        }
        for i in 1..self.maps.len() {
            if self.maps[i].target.twists() != self.maps[i - 1].source.twists() {
                return Some(i + 1);
            }
        }
        None
    }

    /// Number of maps; modules are indexed `0..=len()`.
    pub fn len(&self) -> usize {
        self.maps.len()
    }

    pub fn is_empty(&self) -> bool {
        self.maps.is_empty()
    }

    pub fn module(&self, i: usize) -> &GradedFreeModule {
        if i == 0 {
            &self.f0
        } else {
            &self.maps[i - 1].source
        }
    }

    pub fn maps(&self) -> &[GradedMatrix] {
        &self.maps
    }

    pub fn map(&self, i: usize) -> &GradedMatrix {
        &self.maps[i - 1]
    }

    /// `Ok(None)` when every composite `d_i ∘ d_{i+1}` vanishes, otherwise
    /// `Ok(Some(i))` with the first failing position (1-based). A chain that
    /// does not even compose is reported as an error instead.
    pub fn compose_is_zero(&self, ring: &RingContext) -> Result<Option<usize>, AlgebraError> {
        if let Some(pos) = self.first_shape_defect() {
            return Err(AlgebraError::NotComposable { position: pos });
        }
        for i in 1..self.maps.len() {
            let composite = self.maps[i - 1].compose(ring, &self.maps[i])?;
            if !composite.is_zero() {
                return Ok(Some(i));
            }
        }
        Ok(None)
    }

    /// Transposed matrices in reversed order, twists negated.
    pub fn dualize(&self) -> Complex {
        let r = self.maps.len();
        let f0 = self.module(r).dual();
        let maps = (0..r).map(|j| self.maps[r - 1 - j].transpose()).collect();
        Complex { f0, maps }
    }

    /// Add `s` to every twist; the matrices are unchanged.
    pub fn shifted(&self, s: i64) -> Complex {
        Complex {
            f0: self.f0.shifted(s),
            maps: self.maps.iter().map(|m| m.shifted(s)).collect(),
        }
    }

    pub fn extend(&self, nvars: usize) -> Complex {
        Complex {
            f0: self.f0.clone(),
            maps: self.maps.iter().map(|m| m.extend(nvars)).collect(),
        }
    }

    pub fn ranks(&self) -> Vec<usize> {
        (0..=self.len()).map(|i| self.module(i).rank()).collect()
    }
}

// --- matrix text format ---------------------------------------------------
//
// header `matrix [t0, t1] <- [s0, s1, s2]`, then one line per column with
// `coord: polynomial` entries joined by commas; an empty line is a zero
// column.

pub fn matrix_to_text(ring: &RingContext, m: &GradedMatrix) -> String {
    let fmt_twists = |ts: &[i64]| {
        let inner: Vec<String> = ts.iter().map(|t| t.to_string()).collect();
        format!("[{}]", inner.join(", "))
    };
    let mut out = format!(
        "matrix {} <- {}\n",
        fmt_twists(m.target.twists()),
        fmt_twists(m.source.twists())
    );
    for col in m.columns() {
        let entries: Vec<String> = col
            .support()
            .into_iter()
            .map(|i| {
                format!(
                    "{}: {}",
                    i,
                    crate::arith::poly_to_text(ring, &col.coordinate(ring, i))
                )
            })
            .collect();
        out.push_str(&entries.join(", "));
        out.push('\n');
    }
    out
}

pub fn matrix_from_text(ring: &RingContext, text: &str) -> Result<GradedMatrix, AlgebraError> {
    let mut lines = text.lines();
    let header = lines
        .next()
        .ok_or_else(|| AlgebraError::Parse("empty matrix text".into()))?;
    let header = header.trim();
    let rest = header
        .strip_prefix("matrix")
        .ok_or_else(|| AlgebraError::Parse("matrix header missing".into()))?;
    let (tgt, src) = rest
        .split_once("<-")
        .ok_or_else(|| AlgebraError::Parse("matrix header missing '<-'".into()))?;
    let parse_twists = |s: &str| -> Result<Vec<i64>, AlgebraError> {
        let s = s.trim();
        let s = s
            .strip_prefix('[')
            .and_then(|s| s.strip_suffix(']'))
            .ok_or_else(|| AlgebraError::Parse(format!("bad twist list '{s}'")))?;
        if s.trim().is_empty() {
            return Ok(Vec::new());
        }
        s.split(',')
            .map(|t| {
                t.trim()
                    .parse()
                    .map_err(|_| AlgebraError::Parse(format!("bad twist '{t}'")))
            })
            .collect()
    };
    let target = GradedFreeModule::new(parse_twists(tgt)?);
    let source = GradedFreeModule::new(parse_twists(src)?);
    let mut cols = Vec::new();
    for line in lines {
        if cols.len() == source.rank() && line.trim().is_empty() {
            continue; // trailing blank lines
        }
        let line = line.trim();
        let mut terms = Vec::new();
        if !line.is_empty() {
            for entry in line.split(',') {
                let (coord, poly) = entry
                    .split_once(':')
                    .ok_or_else(|| AlgebraError::Parse(format!("bad matrix entry '{entry}'")))?;
                let coord: usize = coord
                    .trim()
                    .parse()
                    .map_err(|_| AlgebraError::Parse(format!("bad coordinate '{coord}'")))?;
                let poly = crate::arith::poly_from_text(ring, poly)?;
                for (m, c) in poly.terms() {
                    terms.push((coord, m.clone(), *c));
                }
            }
        }
        cols.push(ModuleElement::from_terms(ring, &target, terms)?);
    }
    if cols.len() != source.rank() {
        return Err(AlgebraError::Parse(format!(
            "expected {} columns, found {}",
            source.rank(),
            cols.len()
        )));
    }
    GradedMatrix::new(ring, source, target, cols)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::{poly_from_text, DEFAULT_PRIME};

    fn ring_s() -> RingContext {
        RingContext::new(1, 2, DEFAULT_PRIME).unwrap()
    }

    fn poly(ring: &RingContext, s: &str) -> Polynomial {
        poly_from_text(ring, s).unwrap()
    }

    /// The Koszul-style map (y1, y2): S(-1)^2 -> S.
    fn koszul_map(ring: &RingContext) -> GradedMatrix {
        let source = GradedFreeModule::new(vec![1, 1]);
        let target = GradedFreeModule::rank_one();
        let cols = vec![
            ModuleElement::from_polynomial(&poly(ring, "y1"), 0),
            ModuleElement::from_polynomial(&poly(ring, "y2"), 0),
        ];
        GradedMatrix::new(ring, source, target, cols).unwrap()
    }

    #[test]
    fn apply_identity_and_zero() {
        let ring = ring_s();
        let module = GradedFreeModule::new(vec![1]);
        let id = GradedMatrix::identity(&ring, &module);
        let e = ModuleElement::basis_vector(&ring, &module, 0);
        assert_eq!(id.apply(&ring, &e).unwrap(), e);

        let zero = GradedMatrix::zero(module.clone(), GradedFreeModule::rank_one());
        assert!(zero.apply(&ring, &e).unwrap().is_zero());
    }

    #[test]
    fn apply_koszul_map() {
        let ring = ring_s();
        let m = koszul_map(&ring);
        // e_1 - e_2 |-> y1 - y2
        let v = ModuleElement::from_terms(
            &ring,
            &m.source,
            vec![
                (0, Monomial::one(4), 1),
                (1, Monomial::one(4), DEFAULT_PRIME - 1),
            ],
        )
        .unwrap();
        let image = m.apply(&ring, &v).unwrap();
        let expected = ModuleElement::from_polynomial(&poly(&ring, "y1 - y2"), 0);
        assert_eq!(image, expected);
        assert_eq!(image.degree(&m.target), Some(1));
    }

    #[test]
    fn koszul_complex_squares_to_zero() {
        let ring = ring_s();
        let d1 = koszul_map(&ring);
        // d2 = (-y2, y1)^T : S(-2) -> S(-1)^2
        let source = GradedFreeModule::new(vec![2]);
        let col = ModuleElement::from_terms(
            &ring,
            &d1.source,
            vec![
                (0, Monomial::var(3, 4), DEFAULT_PRIME - 1),
                (1, Monomial::var(2, 4), 1),
            ],
        )
        .unwrap();
        let d2 = GradedMatrix::new(&ring, source, d1.source.clone(), vec![col]).unwrap();
        let complex = Complex::new(GradedFreeModule::rank_one(), vec![d1, d2]).unwrap();
        assert_eq!(complex.compose_is_zero(&ring).unwrap(), None);
    }

    #[test]
    fn identity_chain_fails_at_position_one() {
        let ring = ring_s();
        let module = GradedFreeModule::rank_one();
        let id = GradedMatrix::identity(&ring, &module);
        let chain = Complex::new_unchecked(module, vec![id.clone(), id]);
        assert_eq!(chain.compose_is_zero(&ring).unwrap(), Some(1));
    }

    #[test]
    fn non_composable_reported_distinctly() {
        let ring = ring_s();
        let id1 = GradedMatrix::identity(&ring, &GradedFreeModule::rank_one());
        let id2 = GradedMatrix::identity(&ring, &GradedFreeModule::new(vec![3]));
        let chain = Complex::new_unchecked(GradedFreeModule::rank_one(), vec![id1, id2]);
        assert!(matches!(
            chain.compose_is_zero(&ring),
            Err(AlgebraError::NotComposable { position: 2 })
        ));
    }

    #[test]
    fn dualize_rank_one() {
        let ring = ring_s();
        // S(-1) --x0--> S
        let source = GradedFreeModule::new(vec![1]);
        let target = GradedFreeModule::rank_one();
        let col = ModuleElement::from_polynomial(&poly(&ring, "x0"), 0);
        let d = GradedMatrix::new(&ring, source, target, vec![col]).unwrap();
        let c = Complex::new(GradedFreeModule::rank_one(), vec![d]).unwrap();
        let dual = c.dualize();
        assert_eq!(dual.module(0).twists(), &[-1]);
        assert_eq!(dual.module(1).twists(), &[0]);
        assert_eq!(dual.map(1).entry(&ring, 0, 0), poly(&ring, "x0"));
        // double dual is the original
        assert_eq!(dual.dualize(), c);
    }

    #[test]
    fn twist_examples() {
        let ring = ring_s();
        let d = koszul_map(&ring);
        let c = Complex::new(GradedFreeModule::rank_one(), vec![d]).unwrap();
        assert_eq!(c.shifted(0), c);
        let shifted = c.shifted(-1);
        assert_eq!(shifted.module(1).twists(), &[0, 0]);
        assert_eq!(shifted.module(0).twists(), &[-1]);
    }

    #[test]
    fn matrix_text_round_trip() {
        let ring = ring_s();
        let m = koszul_map(&ring);
        let text = matrix_to_text(&ring, &m);
        let parsed = matrix_from_text(&ring, &text).unwrap();
        assert_eq!(parsed, m);

        // a matrix with a zero column and a two-coordinate column
        let source = GradedFreeModule::new(vec![2, 2]);
        let target = GradedFreeModule::new(vec![1, 1]);
        let col = ModuleElement::from_terms(
            &ring,
            &target,
            vec![
                (0, Monomial::var(2, 4), 1),
                (1, Monomial::var(0, 4), DEFAULT_PRIME - 2),
            ],
        )
        .unwrap();
        let m2 =
            GradedMatrix::new(&ring, source, target, vec![col, ModuleElement::zero()]).unwrap();
        let text2 = matrix_to_text(&ring, &m2);
        assert_eq!(matrix_from_text(&ring, &text2).unwrap(), m2);
    }

    #[test]
    fn schreyer_order_prefers_image_then_index() {
        // basis leads: e_0 -> x0 (coord 0), e_1 -> x1 (coord 0)
        let images = vec![(0, Monomial::var(0, 4)), (0, Monomial::var(1, 4))];
        let order = ModuleOrder::Schreyer(Arc::new(SchreyerOrder {
            images,
            base: ModuleOrder::Pot,
        }));
        // x1 * e_0 vs x0 * e_1: images are both x0*x1, tie goes to index 0
        let a = (0usize, Monomial::var(1, 4));
        let b = (1usize, Monomial::var(0, 4));
        assert_eq!(order.cmp_terms(&a, &b), Ordering::Greater);
        // x1^2 * e_0 (image x0*x1^2) vs x0 * e_1 (image x0*x1): degree wins
        let c = (0usize, Monomial::from_exps(vec![0, 2, 0, 0]));
        assert_eq!(order.cmp_terms(&c, &b), Ordering::Greater);
    }
}
