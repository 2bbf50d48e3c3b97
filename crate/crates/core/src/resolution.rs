//! Free resolutions by iterated Schreyer syzygies, minimization by unit
//! pivots, Betti tables with their analytics, Koszul and tensor complexes,
//! and two independent oracles: the closed-form Betti numbers of powers of
//! the maximal ideal and a Hilbert-series consistency check.

use std::collections::BTreeMap;
use std::fmt;
use std::time::Instant;

use serde::Serialize;

use crate::arith::{binomial_u64, Monomial, Polynomial, RingContext};
use crate::error::AlgebraError;
use crate::freemod::{Complex, GradedFreeModule, GradedMatrix, ModuleElement, ModuleOrder};
use crate::groebner::{buchberger, schreyer_syzygies, GroebnerBasis, PairStrategy};

// --- resolution drivers ----------------------------------------------------

/// A (generally non-minimal) free resolution of the submodule generated by
/// a set of elements, together with the Groebner basis that presents it.
pub struct SubmoduleResolution {
    pub basis: GroebnerBasis,
    /// `F_0` is the free module on the basis elements; the augmentation
    /// sends its generators to the basis elements.
    pub complex: Complex,
}

/// Resolve the submodule generated by `gens` inside `ambient`: Groebner
/// basis first, then the Schreyer syzygy tower until it reaches zero.
pub fn resolve_submodule(
    ring: &RingContext,
    ambient: &GradedFreeModule,
    gens: &[ModuleElement],
    max_length: usize,
    strategy: PairStrategy,
    deadline: Option<Instant>,
) -> Result<SubmoduleResolution, AlgebraError> {
    let basis = buchberger(ring, ambient, &ModuleOrder::Pot, gens, strategy, deadline)?;
    let f0 = basis.span_module();
    let maps = syzygy_tower(ring, basis.clone(), max_length, deadline)?;
    Ok(SubmoduleResolution {
        basis,
        complex: Complex::new(f0, maps)?,
    })
}

/// Resolve the cokernel of a presentation matrix. The first differential of
/// the result maps the free module on the Groebner basis of the presentation
/// columns; the rest of the tower is iterated Schreyer syzygies. The output
/// is exact in positive degrees but not necessarily minimal.
pub fn free_resolution(
    ring: &RingContext,
    presentation: &GradedMatrix,
    max_length: usize,
    strategy: PairStrategy,
    deadline: Option<Instant>,
) -> Result<Complex, AlgebraError> {
    let basis = buchberger(
        ring,
        &presentation.target,
        &ModuleOrder::Pot,
        presentation.columns(),
        strategy,
        deadline,
    )?;
    let mut maps = vec![basis.as_matrix(ring)];
    maps.extend(syzygy_tower(
        ring,
        basis,
        max_length.saturating_sub(1),
        deadline,
    )?);
    Complex::new(presentation.target.clone(), maps)
}

/// Iterate Schreyer syzygies until they vanish. `max_extra` bounds the
/// number of maps produced; running past it means the tower failed to
/// terminate where the syzygy theorem says it must.
fn syzygy_tower(
    ring: &RingContext,
    mut level: GroebnerBasis,
    max_extra: usize,
    deadline: Option<Instant>,
) -> Result<Vec<GradedMatrix>, AlgebraError> {
    let mut maps = Vec::new();
    loop {
        if level.is_empty() {
            break;
        }
        let syz = schreyer_syzygies(ring, &level, deadline)?;
        if syz.matrix.source.rank() == 0 {
            break;
        }
        if maps.len() >= max_extra {
            return Err(AlgebraError::TooLong {
                max_length: max_extra,
            });
        }
        let next = GroebnerBasis::from_syzygy_columns(
            syz.matrix.target.clone(),
            syz.order.clone(),
            syz.matrix.columns().to_vec(),
            ring,
        );
        maps.push(syz.matrix);
        level = next;
    }
    Ok(maps)
}

// --- minimization ------------------------------------------------------------

/// Remove all unit entries from the differentials by Gaussian cancellation,
/// scanning from homological degree 1 upward and taking the first unit in
/// column-major order. The result is quasi-isomorphic to the input; on a
/// resolution it is the minimal resolution.
pub fn minimize(ring: &RingContext, complex: &Complex) -> Result<Complex, AlgebraError> {
    let mut twists: Vec<Vec<i64>> = (0..=complex.len())
        .map(|i| complex.module(i).twists().to_vec())
        .collect();
    let mut cols: Vec<Vec<ModuleElement>> = complex
        .maps()
        .iter()
        .map(|m| m.columns().to_vec())
        .collect();

    'scan: loop {
        for level in 0..cols.len() {
            for c in 0..cols[level].len() {
                if let Some((r, u)) = first_unit(&cols[level][c]) {
                    cancel_pivot(ring, &mut twists, &mut cols, level, r, c, u);
                    continue 'scan;
                }
            }
        }
        break;
    }

    // drop trailing zero maps
    while matches!(cols.last(), Some(last) if last.is_empty()) {
        cols.pop();
        twists.pop();
    }

    let f0 = GradedFreeModule::new(twists[0].clone());
    let mut maps = Vec::with_capacity(cols.len());
    for (level, level_cols) in cols.into_iter().enumerate() {
        maps.push(GradedMatrix::new(
            ring,
            GradedFreeModule::new(twists[level + 1].clone()),
            GradedFreeModule::new(twists[level].clone()),
            level_cols,
        )?);
    }
    Complex::new(f0, maps)
}

/// First term with monomial 1, i.e. the first unit entry of the column
/// (terms are stored with coordinates ascending).
fn first_unit(col: &ModuleElement) -> Option<(usize, u64)> {
    col.terms()
        .iter()
        .find(|(_, m, _)| m.is_one())
        .map(|(r, _, c)| (*r, *c))
}

/// Cancel the unit pivot at row `r`, column `c` of differential `level`
/// (0-based map index). Homogeneity makes the pivot entry a bare constant,
/// so one column sweep clears the row exactly.
fn cancel_pivot(
    ring: &RingContext,
    twists: &mut [Vec<i64>],
    cols: &mut [Vec<ModuleElement>],
    level: usize,
    r: usize,
    c: usize,
    u: u64,
) {
    let pivot = cols[level][c].clone();
    let uinv = ring.field().inv(u);
    for c2 in 0..cols[level].len() {
        if c2 == c {
            continue;
        }
        let r_terms: Vec<(Monomial, u64)> = cols[level][c2]
            .terms()
            .iter()
            .filter(|(i, _, _)| *i == r)
            .map(|(_, m, cf)| (m.clone(), *cf))
            .collect();
        for (m, cf) in r_terms {
            let factor = ring.field().mul(cf, uinv);
            cols[level][c2] = cols[level][c2].combine(ring, &pivot, factor, &m);
        }
    }
    cols[level].remove(c);
    twists[level + 1].remove(c);
    for col in cols[level].iter_mut() {
        *col = col.remap_coords(|i| match i.cmp(&r) {
            std::cmp::Ordering::Less => Some(i),
            std::cmp::Ordering::Equal => None,
            std::cmp::Ordering::Greater => Some(i - 1),
        });
    }
    twists[level].remove(r);
    // the map above loses the cancelled source generator of F_{level+1}
    if level + 1 < cols.len() {
        for col in cols[level + 1].iter_mut() {
            *col = col.remap_coords(|i| match i.cmp(&c) {
                std::cmp::Ordering::Less => Some(i),
                std::cmp::Ordering::Equal => None,
                std::cmp::Ordering::Greater => Some(i - 1),
            });
        }
    }
    // the map below loses the column of the cancelled target generator
    if level >= 1 {
        cols[level - 1].remove(r);
    }
}

// --- Betti tables --------------------------------------------------------------

/// The map `(i, j) -> beta_{i,j}` of a minimal complex; absent means zero.
#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct BettiTable {
    entries: BTreeMap<(usize, i64), u64>,
}

#[derive(Serialize)]
struct BettiEntry {
    i: usize,
    j: i64,
    beta: u64,
}

impl BettiTable {
    pub fn new() -> Self {
        BettiTable::default()
    }

    /// Read the table off a minimal complex: `beta_{i,j}` is the number of
    /// twists equal to `j` in homological position `i`. A unit entry in any
    /// differential is rejected, since the caller skipped minimization.
    pub fn from_complex(complex: &Complex) -> Result<Self, AlgebraError> {
        for (idx, map) in complex.maps().iter().enumerate() {
            for col in map.columns() {
                if col.terms().iter().any(|(_, m, _)| m.is_one()) {
                    return Err(AlgebraError::NotMinimal { position: idx + 1 });
                }
            }
        }
        let mut table = BettiTable::new();
        for i in 0..=complex.len() {
            for &t in complex.module(i).twists() {
                table.add(i, t, 1);
            }
        }
        Ok(table)
    }

    pub fn add(&mut self, i: usize, j: i64, count: u64) {
        if count > 0 {
            *self.entries.entry((i, j)).or_insert(0) += count;
        }
    }

    pub fn get(&self, i: usize, j: i64) -> u64 {
        self.entries.get(&(i, j)).copied().unwrap_or(0)
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn entries(&self) -> impl Iterator<Item = (usize, i64, u64)> + '_ {
        self.entries.iter().map(|(&(i, j), &b)| (i, j, b))
    }

    /// Projective dimension: the largest homological index present.
    pub fn pd(&self) -> usize {
        self.entries.keys().map(|&(i, _)| i).max().unwrap_or(0)
    }

    /// `max { j - i }` over the nonzero entries.
    pub fn regularity(&self) -> Result<i64, AlgebraError> {
        self.entries
            .keys()
            .map(|&(i, j)| j - i as i64)
            .max()
            .ok_or(AlgebraError::EmptyTable)
    }

    /// Total number of generators in homological position `i`.
    pub fn column_total(&self, i: usize) -> u64 {
        self.entries
            .iter()
            .filter(|(&(ci, _), _)| ci == i)
            .map(|(_, &b)| b)
            .sum()
    }

    pub fn max_degree_sequence(&self) -> Result<DegreeSequence, AlgebraError> {
        self.degree_sequence(true)
    }

    pub fn min_degree_sequence(&self) -> Result<DegreeSequence, AlgebraError> {
        self.degree_sequence(false)
    }

    fn degree_sequence(&self, maximal: bool) -> Result<DegreeSequence, AlgebraError> {
        if self.entries.is_empty() {
            return Err(AlgebraError::EmptyTable);
        }
        let pd = self.pd();
        let mut values = Vec::with_capacity(pd + 1);
        for i in 0..=pd {
            let degrees = self
                .entries
                .keys()
                .filter(|&&(ci, _)| ci == i)
                .map(|&(_, j)| j);
            let v = if maximal {
                degrees.max()
            } else {
                degrees.min()
            };
            match v {
                Some(v) => values.push(v),
                None => {
                    return Err(AlgebraError::Internal(format!(
                        "Betti table has a gap at homological index {i}"
                    )))
                }
            }
        }
        Ok(DegreeSequence(values))
    }

    /// Pure: at most one degree per homological position.
    pub fn is_pure(&self) -> bool {
        match (self.max_degree_sequence(), self.min_degree_sequence()) {
            (Ok(a), Ok(b)) => a == b,
            _ => true,
        }
    }

    /// Fixed JSON schema: `{ "entries": [...], "pd": int, "reg": int }`.
    pub fn to_json(&self) -> Result<serde_json::Value, AlgebraError> {
        let entries: Vec<BettiEntry> = self
            .entries()
            .map(|(i, j, beta)| BettiEntry { i, j, beta })
            .collect();
        Ok(serde_json::json!({
            "entries": entries,
            "pd": self.pd(),
            "reg": self.regularity()?,
        }))
    }

    /// Table layout with rows indexed by `j - i` and columns by `i`;
    /// zero entries render as `.`.
    pub fn render_ascii(&self) -> String {
        if self.entries.is_empty() {
            return "(empty Betti table)".to_string();
        }
        let pd = self.pd();
        let rows: Vec<i64> = {
            let lo = self
                .entries
                .keys()
                .map(|&(i, j)| j - i as i64)
                .min()
                .unwrap();
            let hi = self
                .entries
                .keys()
                .map(|&(i, j)| j - i as i64)
                .max()
                .unwrap();
            (lo..=hi).collect()
        };
        let mut cells: Vec<Vec<String>> = Vec::new();
        let mut header = vec![String::new()];
        for i in 0..=pd {
            header.push(i.to_string());
        }
        cells.push(header);
        for &row in &rows {
            let mut line = vec![format!("{row}:")];
            for i in 0..=pd {
                let b = self.get(i, row + i as i64);
                line.push(if b == 0 {
                    ".".to_string()
                } else {
                    b.to_string()
                });
            }
            cells.push(line);
        }
        let ncols = pd + 2;
        let widths: Vec<usize> = (0..ncols)
            .map(|c| cells.iter().map(|r| r[c].len()).max().unwrap_or(1))
            .collect();
        cells
            .iter()
            .map(|row| {
                row.iter()
                    .enumerate()
                    .map(|(c, s)| format!("{:>width$}", s, width = widths[c]))
                    .collect::<Vec<_>>()
                    .join("  ")
            })
            .collect::<Vec<_>>()
            .join("\n")
    }
}

/// Per-column extreme degrees `(t_0, ..., t_r)` of a Betti table.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct DegreeSequence(pub Vec<i64>);

impl DegreeSequence {
    pub fn strictly_increasing(&self) -> bool {
        self.0.windows(2).all(|w| w[0] < w[1])
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }
}

impl fmt::Display for DegreeSequence {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let inner: Vec<String> = self.0.iter().map(|v| v.to_string()).collect();
        write!(f, "({})", inner.join(", "))
    }
}

// --- Koszul and tensor complexes ---------------------------------------------

/// The Koszul complex on a list of homogeneous elements: position `i` is the
/// free module on the size-`i` subsets, with alternating-sign differentials.
pub fn koszul_complex(ring: &RingContext, elems: &[Polynomial]) -> Result<Complex, AlgebraError> {
    let degrees: Vec<i64> = elems
        .iter()
        .map(|p| p.degree().ok_or(AlgebraError::NotHomogeneous))
        .collect::<Result<_, _>>()?;
    let q = elems.len();
    let mut subsets_by_size: Vec<Vec<Vec<usize>>> = Vec::with_capacity(q + 1);
    for k in 0..=q {
        subsets_by_size.push(subsets(q, k));
    }
    let modules: Vec<GradedFreeModule> = subsets_by_size
        .iter()
        .map(|subs| {
            GradedFreeModule::new(
                subs.iter()
                    .map(|t| t.iter().map(|&l| degrees[l]).sum())
                    .collect(),
            )
        })
        .collect();
    let mut maps = Vec::with_capacity(q);
    for k in 1..=q {
        let target_index: BTreeMap<&[usize], usize> = subsets_by_size[k - 1]
            .iter()
            .enumerate()
            .map(|(idx, t)| (t.as_slice(), idx))
            .collect();
        let mut cols = Vec::with_capacity(subsets_by_size[k].len());
        for t in &subsets_by_size[k] {
            let mut terms = Vec::new();
            for (pos, &l) in t.iter().enumerate() {
                let mut face = t.clone();
                face.remove(pos);
                let coord = target_index[face.as_slice()];
                let negate = pos % 2 == 1;
                for (m, c) in elems[l].terms() {
                    let c = if negate { ring.field().neg(*c) } else { *c };
                    terms.push((coord, m.clone(), c));
                }
            }
            cols.push(ModuleElement::from_terms(ring, &modules[k - 1], terms)?);
        }
        maps.push(GradedMatrix::new(
            ring,
            modules[k].clone(),
            modules[k - 1].clone(),
            cols,
        )?);
    }
    Complex::new(modules[0].clone(), maps)
}

fn subsets(q: usize, k: usize) -> Vec<Vec<usize>> {
    fn rec(q: usize, k: usize, start: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == k {
            out.push(cur.clone());
            return;
        }
        for i in start..q {
            cur.push(i);
            rec(q, k, i + 1, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    let mut cur = Vec::with_capacity(k);
    rec(q, k, 0, &mut cur, &mut out);
    out
}

/// Total complex of the double complex `a ⊗ b`, with the sign `(-1)^p` on
/// the second differential. Twists add pairwise.
pub fn tensor_complexes(
    ring: &RingContext,
    a: &Complex,
    b: &Complex,
) -> Result<Complex, AlgebraError> {
    let (la, lb) = (a.len(), b.len());
    // block layout at total position i: (p, q = i - p) for ascending p,
    // pairs (alpha, beta) enumerated alpha-major
    let layout = |i: usize| -> Vec<(usize, usize, usize)> {
        let mut blocks = Vec::new();
        let mut offset = 0;
        let p_lo = i.saturating_sub(lb);
        for p in p_lo..=i.min(la) {
            let q = i - p;
            blocks.push((p, q, offset));
            offset += a.module(p).rank() * b.module(q).rank();
        }
        blocks
    };
    let module_at = |i: usize| -> GradedFreeModule {
        let mut twists = Vec::new();
        for (p, q, _) in layout(i) {
            for &ta in a.module(p).twists() {
                for &tb in b.module(q).twists() {
                    twists.push(ta + tb);
                }
            }
        }
        GradedFreeModule::new(twists)
    };
    let offset_of = |blocks: &[(usize, usize, usize)], p: usize| -> usize {
        blocks
            .iter()
            .find(|(bp, _, _)| *bp == p)
            .map(|(_, _, o)| *o)
            .expect("block present")
    };
    let modules: Vec<GradedFreeModule> = (0..=la + lb).map(module_at).collect();
    let mut maps = Vec::with_capacity(la + lb);
    for i in 1..=la + lb {
        let src_blocks = layout(i);
        let tgt_blocks = layout(i - 1);
        let mut cols = Vec::new();
        for &(p, q, _) in &src_blocks {
            let rank_a = a.module(p).rank();
            let rank_b = b.module(q).rank();
            for alpha in 0..rank_a {
                for beta in 0..rank_b {
                    let mut terms = Vec::new();
                    if p >= 1 {
                        let off = offset_of(&tgt_blocks, p - 1);
                        let col = &a.map(p).columns()[alpha];
                        for (a2, m, c) in col.terms() {
                            terms.push((off + a2 * rank_b + beta, m.clone(), *c));
                        }
                    }
                    if q >= 1 {
                        let off = offset_of(&tgt_blocks, p);
                        let rank_b_tgt = b.module(q - 1).rank();
                        let col = &b.map(q).columns()[beta];
                        for (b2, m, c) in col.terms() {
                            let c = if p % 2 == 1 { ring.field().neg(*c) } else { *c };
                            terms.push((off + alpha * rank_b_tgt + b2, m.clone(), c));
                        }
                    }
                    cols.push(ModuleElement::from_terms(ring, &modules[i - 1], terms)?);
                }
            }
        }
        maps.push(GradedMatrix::new(
            ring,
            modules[i].clone(),
            modules[i - 1].clone(),
            cols,
        )?);
    }
    Complex::new(modules[0].clone(), maps)
}

// --- closed-form oracle ---------------------------------------------------------

/// Betti table of the `a`-th power of the ideal of `q` variables, as a
/// module: the resolution is linear, `beta_i` sits in internal degree
/// `a + i` and equals `sum_{m=i+1}^{q} C(a+m-2, a-1) * C(m-1, i)`.
pub fn power_ideal_betti(q: usize, a: u32) -> BettiTable {
    assert!(q >= 1 && a >= 1);
    let mut table = BettiTable::new();
    for i in 0..q {
        let mut beta = 0u64;
        for m in (i + 1)..=q {
            beta += binomial_u64(a as u64 + m as u64 - 2, a as u64 - 1)
                * binomial_u64(m as u64 - 1, i as u64);
        }
        table.add(i, a as i64 + i as i64, beta);
    }
    table
}

// --- Hilbert series oracle ----------------------------------------------------

/// A Laurent polynomial in one variable with exact integer coefficients.
/// Supports the negative exponents that dual complexes produce.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LaurentPoly {
    lo: i64,
    coeffs: Vec<i128>,
}

impl LaurentPoly {
    pub fn zero() -> Self {
        LaurentPoly {
            lo: 0,
            coeffs: Vec::new(),
        }
    }

    pub fn one() -> Self {
        LaurentPoly {
            lo: 0,
            coeffs: vec![1],
        }
    }

    pub fn term(e: i64, c: i128) -> Self {
        if c == 0 {
            LaurentPoly::zero()
        } else {
            LaurentPoly {
                lo: e,
                coeffs: vec![c],
            }
        }
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    fn normalize(mut self) -> Self {
        while matches!(self.coeffs.last(), Some(0)) {
            self.coeffs.pop();
        }
        let leading_zeros = self.coeffs.iter().take_while(|&&c| c == 0).count();
        if leading_zeros > 0 {
            self.coeffs.drain(..leading_zeros);
            self.lo += leading_zeros as i64;
        }
        if self.coeffs.is_empty() {
            self.lo = 0;
        }
        self
    }

    pub fn add(&self, other: &LaurentPoly) -> LaurentPoly {
        if self.is_zero() {
            return other.clone();
        }
        if other.is_zero() {
            return self.clone();
        }
        let lo = self.lo.min(other.lo);
        let hi = (self.lo + self.coeffs.len() as i64).max(other.lo + other.coeffs.len() as i64);
        let mut coeffs = vec![0i128; (hi - lo) as usize];
        for (k, &c) in self.coeffs.iter().enumerate() {
            coeffs[(self.lo - lo) as usize + k] += c;
        }
        for (k, &c) in other.coeffs.iter().enumerate() {
            coeffs[(other.lo - lo) as usize + k] += c;
        }
        LaurentPoly { lo, coeffs }.normalize()
    }

    pub fn sub(&self, other: &LaurentPoly) -> LaurentPoly {
        self.add(&other.scale(-1))
    }

    pub fn scale(&self, c: i128) -> LaurentPoly {
        if c == 0 {
            return LaurentPoly::zero();
        }
        LaurentPoly {
            lo: self.lo,
            coeffs: self.coeffs.iter().map(|k| k * c).collect(),
        }
    }

    pub fn mul(&self, other: &LaurentPoly) -> LaurentPoly {
        if self.is_zero() || other.is_zero() {
            return LaurentPoly::zero();
        }
        let mut coeffs = vec![0i128; self.coeffs.len() + other.coeffs.len() - 1];
        for (i, &a) in self.coeffs.iter().enumerate() {
            for (j, &b) in other.coeffs.iter().enumerate() {
                coeffs[i + j] += a * b;
            }
        }
        LaurentPoly {
            lo: self.lo + other.lo,
            coeffs,
        }
        .normalize()
    }

    /// Shift by `t^e`.
    pub fn shifted(&self, e: i64) -> LaurentPoly {
        if self.is_zero() {
            return LaurentPoly::zero();
        }
        LaurentPoly {
            lo: self.lo + e,
            coeffs: self.coeffs.clone(),
        }
    }
}

/// Keep only the divisibility-minimal monomials of a list.
fn minimalize(gens: &[Monomial]) -> Vec<Monomial> {
    let mut sorted: Vec<Monomial> = gens.to_vec();
    sorted.sort_by(|a, b| a.degree().cmp(&b.degree()).then_with(|| a.cmp(b)));
    sorted.dedup();
    let mut kept: Vec<Monomial> = Vec::new();
    'outer: for m in sorted {
        for k in &kept {
            if k.divides(&m) {
                continue 'outer;
            }
        }
        kept.push(m);
    }
    kept
}

/// Numerator of the Hilbert series of `S/I` for a monomial ideal `I`,
/// i.e. `HS(S/I) * (1-t)^{#vars}`. Computed by splitting on the most
/// shared variable, which organizes the inclusion-exclusion sum over the
/// generators into a recursion that stays small in practice.
pub fn monomial_quotient_numerator(gens: &[Monomial]) -> LaurentPoly {
    let gens = minimalize(gens);
    numerator_rec(&gens)
}

fn numerator_rec(gens: &[Monomial]) -> LaurentPoly {
    if gens.is_empty() {
        return LaurentPoly::one();
    }
    if gens.iter().any(|g| g.is_one()) {
        return LaurentPoly::zero();
    }
    // pairwise coprime: complete-intersection product formula
    let pairwise_coprime = gens
        .iter()
        .enumerate()
        .all(|(i, g)| gens[i + 1..].iter().all(|h| g.coprime(h)));
    if pairwise_coprime {
        let mut acc = LaurentPoly::one();
        for g in gens {
            acc = acc.mul(&LaurentPoly::one().sub(&LaurentPoly::term(g.degree() as i64, 1)));
        }
        return acc;
    }
    // split on the variable shared by the most generators:
    // Num(S/I) = (1-t) * Num(S/(J)) + t * Num(S/(I:v)) with J the
    // generators not involving v
    let nvars = gens[0].nvars();
    let (var, _) = (0..nvars)
        .map(|v| (v, gens.iter().filter(|g| g.exponents()[v] > 0).count()))
        .max_by_key(|&(v, count)| (count, std::cmp::Reverse(v)))
        .expect("nonempty generator list");
    let without: Vec<Monomial> = gens
        .iter()
        .filter(|g| g.exponents()[var] == 0)
        .cloned()
        .collect();
    let plus = LaurentPoly::one()
        .sub(&LaurentPoly::term(1, 1))
        .mul(&numerator_rec(&minimalize(&without)));
    let colon: Vec<Monomial> = gens
        .iter()
        .map(|g| {
            let mut exps = g.exponents().to_vec();
            if exps[var] > 0 {
                exps[var] -= 1;
            }
            Monomial::from_exps(exps)
        })
        .collect();
    let colon_num = numerator_rec(&minimalize(&colon)).shifted(1);
    plus.add(&colon_num)
}

/// Literal inclusion-exclusion over all generator subsets; exponential,
/// used as the cross-oracle for the recursion on small inputs.
pub fn inclusion_exclusion_numerator(gens: &[Monomial]) -> LaurentPoly {
    let gens = minimalize(gens);
    assert!(
        gens.len() <= 20,
        "inclusion-exclusion oracle is for small inputs"
    );
    let mut acc = LaurentPoly::zero();
    for mask in 0u32..(1 << gens.len()) {
        let mut lcm: Option<Monomial> = None;
        for (k, g) in gens.iter().enumerate() {
            if mask & (1 << k) != 0 {
                lcm = Some(match lcm {
                    None => g.clone(),
                    Some(l) => l.lcm(g),
                });
            }
        }
        let sign = if mask.count_ones() % 2 == 0 { 1 } else { -1 };
        let deg = lcm.map(|l| l.degree() as i64).unwrap_or(0);
        acc = acc.add(&LaurentPoly::term(deg, sign));
    }
    acc
}

/// Alternating sum `sum_i (-1)^i sum_j beta_{i,j} t^j`.
pub fn betti_k_polynomial(betti: &BettiTable) -> LaurentPoly {
    let mut acc = LaurentPoly::zero();
    for (i, j, b) in betti.entries() {
        let sign = if i % 2 == 0 { 1 } else { -1 };
        acc = acc.add(&LaurentPoly::term(j, sign * b as i128));
    }
    acc
}

/// Independent correctness oracle: the alternating Betti sum must equal the
/// K-polynomial of the presented cokernel, computed from the lead-term
/// module of a fresh Groebner basis by monomial counting. Exact polynomial
/// comparison; both sides are polynomials of bounded degree.
pub fn hilbert_check(
    ring: &RingContext,
    presentation: &GradedMatrix,
    betti: &BettiTable,
    strategy: PairStrategy,
) -> Result<bool, AlgebraError> {
    let basis = buchberger(
        ring,
        &presentation.target,
        &ModuleOrder::Pot,
        presentation.columns(),
        strategy,
        None,
    )?;
    let mut k_coker = LaurentPoly::zero();
    for coord in 0..presentation.target.rank() {
        let leads: Vec<Monomial> = basis
            .leads()
            .iter()
            .filter(|(c, _)| *c == coord)
            .map(|(_, m)| m.clone())
            .collect();
        let num = monomial_quotient_numerator(&leads);
        k_coker = k_coker.add(&num.shifted(presentation.target.twist(coord)));
    }
    Ok(k_coker == betti_k_polynomial(betti))
}

// --- convenience ---------------------------------------------------------------

/// Presentation of the quotient `S/(gens)` as a one-row matrix.
pub fn quotient_presentation(
    ring: &RingContext,
    gens: &[Polynomial],
) -> Result<GradedMatrix, AlgebraError> {
    let target = GradedFreeModule::rank_one();
    let source = GradedFreeModule::new(
        gens.iter()
            .map(|p| p.degree().ok_or(AlgebraError::NotHomogeneous))
            .collect::<Result<_, _>>()?,
    );
    let cols = gens
        .iter()
        .map(|p| ModuleElement::from_polynomial(p, 0))
        .collect();
    GradedMatrix::new(ring, source, target, cols)
}

/// A resolved submodule: the Groebner basis presenting it, the raw Schreyer
/// resolution, its minimization, and the minimal Betti table.
pub struct ModuleAnalysis {
    pub basis: GroebnerBasis,
    pub resolution: Complex,
    pub minimal: Complex,
    pub betti: BettiTable,
}

/// Resolve and minimize the module generated by `gens` inside `ambient`.
pub fn analyze_submodule(
    ring: &RingContext,
    ambient: &GradedFreeModule,
    gens: &[ModuleElement],
    strategy: PairStrategy,
    deadline: Option<Instant>,
) -> Result<ModuleAnalysis, AlgebraError> {
    let max_length = ring.num_vars() + 1;
    let resolved = resolve_submodule(ring, ambient, gens, max_length, strategy, deadline)?;
    let minimal = minimize(ring, &resolved.complex)?;
    debug_assert_eq!(resolved.complex.compose_is_zero(ring), Ok(None));
    debug_assert_eq!(minimal.compose_is_zero(ring), Ok(None));
    let betti = BettiTable::from_complex(&minimal)?;
    Ok(ModuleAnalysis {
        basis: resolved.basis,
        resolution: resolved.complex,
        minimal,
        betti,
    })
}
