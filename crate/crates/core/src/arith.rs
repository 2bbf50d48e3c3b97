//! Exact coefficient arithmetic, monomials, monomial orders, and sparse
//! homogeneous polynomials — the substrate for everything else.
//!
//! The ambient ring is `F_p[x_0..x_n, y_1..y_N]` with the variables ordered
//! `x_0 > ... > x_n > y_1 > ... > y_N`. All polynomial values are homogeneous;
//! constructors validate this once and arithmetic preserves it.

use std::cmp::Ordering;

use num_bigint::BigUint;

use crate::error::AlgebraError;

pub const DEFAULT_PRIME: u64 = 32003;

/// Largest supported characteristic (products of two residues fit in u64
/// after a u128 widening multiply; primality is checked by trial division).
const MAX_PRIME: u64 = 1 << 31;

/// The coefficient field `F_p`. Elements are canonical residues in `0..p`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct PrimeField {
    p: u64,
}

impl PrimeField {
    pub fn new(p: u64) -> Result<Self, AlgebraError> {
        if !(2..MAX_PRIME).contains(&p) || !is_prime(p) {
            return Err(AlgebraError::BadPrime(p));
        }
        Ok(PrimeField { p })
    }

    pub fn characteristic(&self) -> u64 {
        self.p
    }

    /// Reduce a signed integer to its canonical residue.
    pub fn reduce(&self, a: i64) -> u64 {
        let p = self.p as i64;
        (a.rem_euclid(p)) as u64
    }

    pub fn add(&self, a: u64, b: u64) -> u64 {
        let s = a + b;
        if s >= self.p {
            s - self.p
        } else {
            s
        }
    }

    pub fn sub(&self, a: u64, b: u64) -> u64 {
        if a >= b {
            a - b
        } else {
            a + self.p - b
        }
    }

    pub fn neg(&self, a: u64) -> u64 {
        if a == 0 {
            0
        } else {
            self.p - a
        }
    }

    pub fn mul(&self, a: u64, b: u64) -> u64 {
        ((a as u128 * b as u128) % self.p as u128) as u64
    }

    /// Multiplicative inverse by the extended Euclidean algorithm.
    /// Panics on zero, which would indicate a kernel bug.
    pub fn inv(&self, a: u64) -> u64 {
        assert!(a != 0, "inverse of zero");
        let (mut r0, mut r1) = (self.p as i64, a as i64);
        let (mut t0, mut t1) = (0i64, 1i64);
        while r1 != 0 {
            let q = r0 / r1;
            (r0, r1) = (r1, r0 - q * r1);
            (t0, t1) = (t1, t0 - q * t1);
        }
        debug_assert_eq!(r0, 1, "{} not invertible mod {}", a, self.p);
        self.reduce(t0)
    }

    pub fn div(&self, a: u64, b: u64) -> u64 {
        self.mul(a, self.inv(b))
    }

    /// Lift a residue to the signed representative in `(-p/2, p/2]`,
    /// convenient for printing.
    pub fn balanced(&self, a: u64) -> i64 {
        if a > self.p / 2 {
            a as i64 - self.p as i64
        } else {
            a as i64
        }
    }
}

fn is_prime(p: u64) -> bool {
    if p < 4 {
        return p >= 2;
    }
    if p.is_multiple_of(2) {
        return false;
    }
    let mut d = 3;
    while d * d <= p {
        if p.is_multiple_of(d) {
            return false;
        }
        d += 2;
    }
    true
}

/// A monomial: dense exponent vector over all ring variables, with the
/// total degree cached.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Monomial {
    exps: Vec<u32>,
    deg: u32,
}

impl Monomial {
    pub fn one(nvars: usize) -> Self {
        Monomial {
            exps: vec![0; nvars],
            deg: 0,
        }
    }

    pub fn var(i: usize, nvars: usize) -> Self {
        assert!(i < nvars);
        let mut exps = vec![0; nvars];
        exps[i] = 1;
        Monomial { exps, deg: 1 }
    }

    pub fn from_exps(exps: Vec<u32>) -> Self {
        let deg = exps.iter().sum();
        Monomial { exps, deg }
    }

    pub fn exponents(&self) -> &[u32] {
        &self.exps
    }

    pub fn nvars(&self) -> usize {
        self.exps.len()
    }

    pub fn degree(&self) -> u32 {
        self.deg
    }

    pub fn is_one(&self) -> bool {
        self.deg == 0
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        assert_eq!(self.exps.len(), other.exps.len());
        let exps = self
            .exps
            .iter()
            .zip(&other.exps)
            .map(|(a, b)| a + b)
            .collect();
        Monomial {
            exps,
            deg: self.deg + other.deg,
        }
    }

    pub fn pow(&self, e: u32) -> Monomial {
        let exps = self.exps.iter().map(|a| a * e).collect();
        Monomial {
            exps,
            deg: self.deg * e,
        }
    }

    /// Does `self` divide `other`?
    pub fn divides(&self, other: &Monomial) -> bool {
        self.deg <= other.deg && self.exps.iter().zip(&other.exps).all(|(a, b)| a <= b)
    }

    /// `self / other`, when `other` divides `self`.
    pub fn div(&self, other: &Monomial) -> Option<Monomial> {
        if !other.divides(self) {
            return None;
        }
        let exps = self
            .exps
            .iter()
            .zip(&other.exps)
            .map(|(a, b)| a - b)
            .collect();
        Some(Monomial {
            exps,
            deg: self.deg - other.deg,
        })
    }

    pub fn lcm(&self, other: &Monomial) -> Monomial {
        assert_eq!(self.exps.len(), other.exps.len());
        let exps: Vec<u32> = self
            .exps
            .iter()
            .zip(&other.exps)
            .map(|(a, b)| *a.max(b))
            .collect();
        Monomial::from_exps(exps)
    }

    pub fn coprime(&self, other: &Monomial) -> bool {
        self.exps
            .iter()
            .zip(&other.exps)
            .all(|(a, b)| *a == 0 || *b == 0)
    }

    /// View this monomial in a larger ring: the new variables get exponent 0.
    /// Used to lift elements of the subring R into S.
    pub fn extend(&self, nvars: usize) -> Monomial {
        assert!(nvars >= self.exps.len());
        let mut exps = self.exps.clone();
        exps.resize(nvars, 0);
        Monomial {
            exps,
            deg: self.deg,
        }
    }
}

/// Monomial order tag. Only a global degree-refining order is supported.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub enum MonomialOrder {
    /// Higher total degree wins; ties broken by the smaller last nonzero
    /// entry of the exponent difference (graded reverse lexicographic).
    #[default]
    DegRevLex,
}

/// Total order on monomials of the same ring.
pub fn monomial_compare(
    a: &Monomial,
    b: &Monomial,
    order: MonomialOrder,
) -> Result<Ordering, AlgebraError> {
    if a.exps.len() != b.exps.len() {
        return Err(AlgebraError::VarCountMismatch {
            left: a.exps.len(),
            right: b.exps.len(),
        });
    }
    Ok(degrevlex(a, b, order))
}

pub(crate) fn degrevlex(a: &Monomial, b: &Monomial, _order: MonomialOrder) -> Ordering {
    match a.deg.cmp(&b.deg) {
        Ordering::Equal => {}
        ord => return ord,
    }
    for i in (0..a.exps.len()).rev() {
        let (ea, eb) = (a.exps[i], b.exps[i]);
        if ea != eb {
            // last nonzero entry of a - b negative <=> a greater
            return if ea < eb {
                Ordering::Greater
            } else {
                Ordering::Less
            };
        }
    }
    Ordering::Equal
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for Monomial {
    fn cmp(&self, other: &Self) -> Ordering {
        assert_eq!(self.exps.len(), other.exps.len());
        degrevlex(self, other, MonomialOrder::DegRevLex)
    }
}

/// The ambient graded polynomial ring `F_p[x_0..x_n, y_1..y_N]`.
/// `codim = 0` denotes the subring R with no y-block.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RingContext {
    n: usize,
    codim: usize,
    field: PrimeField,
    order: MonomialOrder,
}

impl RingContext {
    pub fn new(n: usize, codim: usize, p: u64) -> Result<Self, AlgebraError> {
        Ok(RingContext {
            n,
            codim,
            field: PrimeField::new(p)?,
            order: MonomialOrder::DegRevLex,
        })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn codim(&self) -> usize {
        self.codim
    }

    pub fn field(&self) -> &PrimeField {
        &self.field
    }

    pub fn order(&self) -> MonomialOrder {
        self.order
    }

    pub fn num_vars(&self) -> usize {
        self.n + 1 + self.codim
    }

    /// The y-free subring R with the same x-block and characteristic.
    pub fn subring_r(&self) -> RingContext {
        RingContext {
            n: self.n,
            codim: 0,
            field: self.field,
            order: self.order,
        }
    }

    pub fn var_name(&self, i: usize) -> String {
        assert!(i < self.num_vars());
        if i <= self.n {
            format!("x{i}")
        } else {
            format!("y{}", i - self.n)
        }
    }

    pub fn var_index(&self, name: &str) -> Option<usize> {
        let mut chars = name.chars();
        let block = chars.next()?;
        let idx: usize = chars.as_str().parse().ok()?;
        match block {
            'x' if idx <= self.n => Some(idx),
            'y' if idx >= 1 && idx <= self.codim => Some(self.n + idx),
            _ => None,
        }
    }

    /// Index of `y_j` (1-based j).
    pub fn y_index(&self, j: usize) -> usize {
        assert!(j >= 1 && j <= self.codim);
        self.n + j
    }

    pub fn var_names(&self) -> Vec<String> {
        (0..self.num_vars()).map(|i| self.var_name(i)).collect()
    }
}

/// Exact binomial coefficient. `b > a` yields zero by convention.
pub fn binomial(a: u64, b: u64) -> BigUint {
    if b > a {
        return BigUint::from(0u32);
    }
    let b = b.min(a - b);
    let mut result = BigUint::from(1u32);
    for i in 0..b {
        result *= a - i;
        result /= i + 1; // exact: product of i+1 consecutive integers
    }
    result
}

/// Binomial coefficient as u64 for desk-scale table arithmetic.
/// Panics on overflow, which the callers' parameter ranges rule out.
pub fn binomial_u64(a: u64, b: u64) -> u64 {
    use std::convert::TryFrom;
    u64::try_from(&binomial(a, b)).expect("binomial overflows u64")
}

/// All degree-`d` monomials supported on the variable range `lo..hi`,
/// in lexicographic order (largest exponent on the earliest variable first).
pub fn monomials_of_degree(nvars: usize, lo: usize, hi: usize, d: u32) -> Vec<Monomial> {
    assert!(lo <= hi && hi <= nvars);
    let mut out = Vec::new();
    let mut exps = vec![0u32; nvars];
    fn rec(exps: &mut Vec<u32>, pos: usize, hi: usize, left: u32, out: &mut Vec<Monomial>) {
        if pos + 1 == hi {
            exps[pos] = left;
            out.push(Monomial::from_exps(exps.clone()));
            exps[pos] = 0;
            return;
        }
        for e in (0..=left).rev() {
            exps[pos] = e;
            rec(exps, pos + 1, hi, left - e, out);
        }
        exps[pos] = 0;
    }
    if lo == hi {
        if d == 0 {
            out.push(Monomial::one(nvars));
        }
        return out;
    }
    rec(&mut exps, lo, hi, d, &mut out);
    out
}

/// A sparse homogeneous polynomial: terms strictly descending under the
/// ring's monomial order, no zero coefficients, no duplicate monomials.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Polynomial {
    terms: Vec<(Monomial, u64)>,
}

impl Polynomial {
    pub fn zero() -> Self {
        Polynomial { terms: Vec::new() }
    }

    /// Normalizing constructor: sorts, merges duplicates, drops zeros,
    /// and checks homogeneity and variable counts.
    pub fn from_terms(
        ring: &RingContext,
        mut terms: Vec<(Monomial, u64)>,
    ) -> Result<Self, AlgebraError> {
        for (m, _) in &terms {
            if m.nvars() != ring.num_vars() {
                return Err(AlgebraError::VarCountMismatch {
                    left: m.nvars(),
                    right: ring.num_vars(),
                });
            }
        }
        terms.sort_by(|a, b| b.0.cmp(&a.0));
        let mut merged: Vec<(Monomial, u64)> = Vec::with_capacity(terms.len());
        for (m, c) in terms {
            let c = c % ring.field().characteristic();
            if let Some(last) = merged.last_mut() {
                if last.0 == m {
                    last.1 = ring.field().add(last.1, c);
                    continue;
                }
            }
            merged.push((m, c));
        }
        merged.retain(|(_, c)| *c != 0);
        let poly = Polynomial { terms: merged };
        if let Some(d) = poly.terms.first().map(|(m, _)| m.degree()) {
            if poly.terms.iter().any(|(m, _)| m.degree() != d) {
                return Err(AlgebraError::NotHomogeneous);
            }
        }
        Ok(poly)
    }

    pub fn monomial(ring: &RingContext, m: Monomial, c: u64) -> Self {
        Polynomial::from_terms(ring, vec![(m, c)]).expect("single term is homogeneous")
    }

    pub fn variable(ring: &RingContext, i: usize) -> Self {
        Polynomial::monomial(ring, Monomial::var(i, ring.num_vars()), 1)
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn degree(&self) -> Option<i64> {
        self.terms.first().map(|(m, _)| m.degree() as i64)
    }

    pub fn terms(&self) -> &[(Monomial, u64)] {
        &self.terms
    }

    pub fn leading_term(&self) -> Option<(&Monomial, u64)> {
        self.terms.first().map(|(m, c)| (m, *c))
    }

    /// `self - c * m * g`: the reduction-step primitive. Both inputs must be
    /// homogeneous with `deg self = deg m + deg g` (or either side zero).
    pub fn combine(
        &self,
        ring: &RingContext,
        g: &Polynomial,
        c: u64,
        m: &Monomial,
    ) -> Result<Polynomial, AlgebraError> {
        if let (Some(df), Some(dg)) = (self.degree(), g.degree()) {
            let expected = m.degree() as i64 + dg;
            if df != expected {
                return Err(AlgebraError::DegreeMismatch {
                    expected,
                    found: df,
                });
            }
        }
        let f = self.terms.iter().cloned();
        let scaled = g
            .terms
            .iter()
            .map(|(gm, gc)| (gm.mul(m), ring.field().neg(ring.field().mul(*gc, c))));
        Ok(Polynomial {
            terms: merge_terms(ring.field(), f, scaled),
        })
    }

    pub fn add(&self, ring: &RingContext, other: &Polynomial) -> Polynomial {
        Polynomial {
            terms: merge_terms(
                ring.field(),
                self.terms.iter().cloned(),
                other.terms.iter().cloned(),
            ),
        }
    }

    pub fn neg(&self, ring: &RingContext) -> Polynomial {
        Polynomial {
            terms: self
                .terms
                .iter()
                .map(|(m, c)| (m.clone(), ring.field().neg(*c)))
                .collect(),
        }
    }

    pub fn scale(&self, ring: &RingContext, c: u64) -> Polynomial {
        if c == 0 {
            return Polynomial::zero();
        }
        Polynomial {
            terms: self
                .terms
                .iter()
                .map(|(m, k)| (m.clone(), ring.field().mul(*k, c)))
                .collect(),
        }
    }

    /// Multiply by a single term `c * m`.
    pub fn mul_term(&self, ring: &RingContext, m: &Monomial, c: u64) -> Polynomial {
        if c == 0 {
            return Polynomial::zero();
        }
        Polynomial {
            terms: self
                .terms
                .iter()
                .map(|(tm, tc)| (tm.mul(m), ring.field().mul(*tc, c)))
                .collect(),
        }
    }

    pub fn mul(&self, ring: &RingContext, other: &Polynomial) -> Polynomial {
        let mut acc = Polynomial::zero();
        for (m, c) in &other.terms {
            acc = acc.add(ring, &self.mul_term(ring, m, *c));
        }
        acc
    }

    /// View over a larger ring (extra variables appended with exponent 0).
    pub fn extend(&self, nvars: usize) -> Polynomial {
        Polynomial {
            terms: self
                .terms
                .iter()
                .map(|(m, c)| (m.extend(nvars), *c))
                .collect(),
        }
    }

    /// Debug validator: strictly sorted, zero-free, homogeneous.
    pub fn is_normalized(&self) -> bool {
        if self.terms.iter().any(|(_, c)| *c == 0) {
            return false;
        }
        if self
            .terms
            .windows(2)
            .any(|w| w[0].0.cmp(&w[1].0) != Ordering::Greater)
        {
            return false;
        }
        match self.terms.first() {
            None => true,
            Some((m0, _)) => self.terms.iter().all(|(m, _)| m.degree() == m0.degree()),
        }
    }
}

/// Merge two term streams, each strictly descending, combining coefficients.
fn merge_terms<I, J>(field: &PrimeField, a: I, b: J) -> Vec<(Monomial, u64)>
where
    I: Iterator<Item = (Monomial, u64)>,
    J: Iterator<Item = (Monomial, u64)>,
{
    let mut a = a.peekable();
    let mut b = b.peekable();
    let mut out = Vec::new();
    loop {
        let take_a = match (a.peek(), b.peek()) {
            (None, None) => break,
            (Some(_), None) => true,
            (None, Some(_)) => false,
            (Some((ma, _)), Some((mb, _))) => match ma.cmp(mb) {
                Ordering::Greater => true,
                Ordering::Less => false,
                Ordering::Equal => {
                    let (m, ca) = a.next().unwrap();
                    let (_, cb) = b.next().unwrap();
                    let c = field.add(ca, cb);
                    if c != 0 {
                        out.push((m, c));
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
        if t.1 != 0 {
            out.push(t);
        }
    }
    out
}

// --- text format ---------------------------------------------------------
//
// terms joined by `+` / `-`; a term is an optional integer coefficient and
// `*`-separated powers like `x0^2*y1`; whitespace insignificant.

pub fn poly_to_text(ring: &RingContext, poly: &Polynomial) -> String {
    if poly.is_zero() {
        return "0".to_string();
    }
    let mut out = String::new();
    for (idx, (m, c)) in poly.terms.iter().enumerate() {
        let signed = ring.field().balanced(*c);
        let (sign, mag) = if signed < 0 {
            ('-', -signed)
        } else {
            ('+', signed)
        };
        if idx == 0 {
            if sign == '-' {
                out.push('-');
            }
        } else {
            out.push_str(if sign == '-' { " - " } else { " + " });
        }
        let mono = monomial_to_text(ring, m);
        if mono.is_empty() {
            out.push_str(&mag.to_string());
        } else if mag == 1 {
            out.push_str(&mono);
        } else {
            out.push_str(&format!("{mag}*{mono}"));
        }
    }
    out
}

pub fn monomial_to_text(ring: &RingContext, m: &Monomial) -> String {
    let mut parts = Vec::new();
    for (i, e) in m.exponents().iter().enumerate() {
        match e {
            0 => {}
            1 => parts.push(ring.var_name(i)),
            _ => parts.push(format!("{}^{}", ring.var_name(i), e)),
        }
    }
    parts.join("*")
}

pub fn poly_from_text(ring: &RingContext, text: &str) -> Result<Polynomial, AlgebraError> {
    let compact: String = text.chars().filter(|c| !c.is_whitespace()).collect();
    if compact.is_empty() {
        return Err(AlgebraError::Parse("empty polynomial".into()));
    }
    if compact == "0" {
        return Ok(Polynomial::zero());
    }
    let mut terms = Vec::new();
    let mut rest = compact.as_str();
    let mut sign = 1i64;
    if let Some(r) = rest.strip_prefix('-') {
        sign = -1;
        rest = r;
    } else if let Some(r) = rest.strip_prefix('+') {
        rest = r;
    }
    while !rest.is_empty() {
        let split = rest
            .char_indices()
            .skip(1)
            .find(|(i, c)| (*c == '+' || *c == '-') && !rest[..*i].ends_with('^'))
            .map(|(i, _)| i);
        let (chunk, tail) = match split {
            Some(i) => (&rest[..i], &rest[i..]),
            None => (rest, ""),
        };
        terms.push(parse_term(ring, chunk, sign)?);
        rest = tail;
        if let Some(r) = rest.strip_prefix('-') {
            sign = -1;
            rest = r;
        } else if let Some(r) = rest.strip_prefix('+') {
            sign = 1;
            rest = r;
        }
    }
    Polynomial::from_terms(ring, terms)
}

fn parse_term(ring: &RingContext, chunk: &str, sign: i64) -> Result<(Monomial, u64), AlgebraError> {
    let mut coeff: i64 = 1;
    let mut exps = vec![0u32; ring.num_vars()];
    for factor in chunk.split('*') {
        if factor.is_empty() {
            return Err(AlgebraError::Parse(format!(
                "empty factor in term '{chunk}'"
            )));
        }
        if factor.chars().next().unwrap().is_ascii_digit() {
            let c: i64 = factor
                .parse()
                .map_err(|_| AlgebraError::Parse(format!("bad coefficient '{factor}'")))?;
            coeff = coeff
                .checked_mul(c)
                .ok_or_else(|| AlgebraError::Parse(format!("coefficient overflow in '{chunk}'")))?;
            continue;
        }
        let (name, exp) = match factor.split_once('^') {
            Some((name, e)) => {
                let e: u32 = e
                    .parse()
                    .map_err(|_| AlgebraError::Parse(format!("bad exponent in '{factor}'")))?;
                (name, e)
            }
            None => (factor, 1),
        };
        let idx = ring
            .var_index(name)
            .ok_or_else(|| AlgebraError::Parse(format!("unknown variable '{name}'")))?;
        exps[idx] += exp;
    }
    Ok((Monomial::from_exps(exps), ring.field().reduce(sign * coeff)))
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn ring_s() -> RingContext {
        // S = F_32003[x0, x1, y1, y2]
        RingContext::new(1, 2, DEFAULT_PRIME).unwrap()
    }

    fn mono(ring: &RingContext, text: &str) -> Monomial {
        let p = poly_from_text(ring, text).unwrap();
        p.terms()[0].0.clone()
    }

    #[test]
    fn field_inverses() {
        let f = PrimeField::new(101).unwrap();
        for a in 1..101 {
            assert_eq!(f.mul(a, f.inv(a)), 1);
        }
        let f = PrimeField::new(DEFAULT_PRIME).unwrap();
        for a in [1, 2, 17, 31999, 32002] {
            assert_eq!(f.mul(a, f.inv(a)), 1);
        }
    }

    #[test]
    fn rejects_composite_characteristic() {
        assert!(PrimeField::new(32004).is_err());
        assert!(PrimeField::new(1).is_err());
    }

    #[test]
    fn degrevlex_examples() {
        let ring = ring_s();
        let a = mono(&ring, "x0^2");
        let b = mono(&ring, "x0*x1");
        assert_eq!(
            monomial_compare(&a, &b, MonomialOrder::DegRevLex).unwrap(),
            Ordering::Greater
        );
        assert_eq!(
            monomial_compare(&a, &a, MonomialOrder::DegRevLex).unwrap(),
            Ordering::Equal
        );
        // x-before-y block order
        let c = mono(&ring, "x0*y1");
        let d = mono(&ring, "y1^2");
        assert_eq!(
            monomial_compare(&c, &d, MonomialOrder::DegRevLex).unwrap(),
            Ordering::Greater
        );
    }

    #[test]
    fn compare_rejects_mismatched_rings() {
        let a = Monomial::one(2);
        let b = Monomial::one(4);
        assert!(monomial_compare(&a, &b, MonomialOrder::DegRevLex).is_err());
    }

    #[test]
    fn combine_cancellation() {
        let ring = ring_s();
        let f = poly_from_text(&ring, "x0^2").unwrap();
        let g = poly_from_text(&ring, "x0").unwrap();
        let m = mono(&ring, "x0");
        assert!(f.combine(&ring, &g, 1, &m).unwrap().is_zero());

        let f = poly_from_text(&ring, "x0*y1 + x1*y1").unwrap();
        let g = poly_from_text(&ring, "y1").unwrap();
        let m = mono(&ring, "x0");
        let r = f.combine(&ring, &g, 1, &m).unwrap();
        assert_eq!(poly_to_text(&ring, &r), "x1*y1");
    }

    #[test]
    fn combine_from_zero_gives_modular_negation() {
        let ring = ring_s();
        let f = Polynomial::zero();
        let g = poly_from_text(&ring, "y1^2").unwrap();
        let m = mono(&ring, "y2");
        let r = f.combine(&ring, &g, 2, &m).unwrap();
        assert_eq!(r.terms()[0].1, DEFAULT_PRIME - 2);
        assert_eq!(poly_to_text(&ring, &r), "-2*y1^2*y2");
    }

    #[test]
    fn combine_rejects_degree_mismatch() {
        let ring = ring_s();
        let f = poly_from_text(&ring, "x0^3").unwrap();
        let g = poly_from_text(&ring, "x0").unwrap();
        let m = mono(&ring, "x0");
        assert!(matches!(
            f.combine(&ring, &g, 1, &m),
            Err(AlgebraError::DegreeMismatch { .. })
        ));
    }

    #[test]
    fn binomial_small_values() {
        assert_eq!(binomial(3, 2), BigUint::from(3u32));
        // n = 1, d = 5: binom(n + d, n)
        assert_eq!(binomial(6, 1), BigUint::from(6u32));
        assert_eq!(binomial(2, 5), BigUint::from(0u32));
    }

    #[test]
    fn binomial_full_scale_comparison() {
        // the shape with n = 20, N = 5000, k = 50, d = 50 is admissible
        assert!(binomial(5049, 50) > binomial(70, 20));
    }

    #[test]
    fn binomial_pascal_rule_exhaustive() {
        for a in 1u64..=60 {
            for b in 1..=a {
                assert_eq!(binomial(a, b), binomial(a - 1, b - 1) + binomial(a - 1, b));
            }
        }
    }

    #[test]
    fn monomial_enumeration_lex() {
        let basis = monomials_of_degree(4, 2, 4, 2);
        assert_eq!(basis.len(), 3);
        assert_eq!(basis[0].exponents(), &[0, 0, 2, 0]);
        assert_eq!(basis[1].exponents(), &[0, 0, 1, 1]);
        assert_eq!(basis[2].exponents(), &[0, 0, 0, 2]);
        assert_eq!(monomials_of_degree(3, 0, 3, 3).len(), 10);
    }

    #[test]
    fn text_round_trip_examples() {
        let ring = ring_s();
        for s in ["x0^2*y1 - y2^3", "3*x0*x1", "0", "y1*y2 + y2^2 - x0*y2"] {
            let p = poly_from_text(&ring, s).unwrap();
            let printed = poly_to_text(&ring, &p);
            assert_eq!(poly_from_text(&ring, &printed).unwrap(), p);
        }
    }

    fn arb_monomial(deg: u32) -> impl Strategy<Value = Monomial> {
        // random exponent split of a fixed total degree over 4 variables
        prop::collection::vec(0..=deg, 3).prop_map(move |cuts| {
            let mut c = cuts;
            c.sort();
            let exps = vec![c[0], c[1] - c[0], c[2] - c[1], deg - c[2]];
            Monomial::from_exps(exps)
        })
    }

    proptest! {
        #[test]
        fn order_is_multiplicative(a in arb_monomial(5), b in arb_monomial(5), m in arb_monomial(3)) {
            let ord = a.cmp(&b);
            prop_assert_eq!(a.mul(&m).cmp(&b.mul(&m)), ord);
        }

        #[test]
        fn order_is_transitive(a in arb_monomial(4), b in arb_monomial(4), c in arb_monomial(4)) {
            if a.cmp(&b) != Ordering::Less && b.cmp(&c) != Ordering::Less {
                prop_assert_ne!(a.cmp(&c), Ordering::Less);
            }
        }

        #[test]
        fn combine_keeps_normal_form(
            ta in prop::collection::vec((arb_monomial(4), 1u64..DEFAULT_PRIME), 0..6),
            tb in prop::collection::vec((arb_monomial(2), 1u64..DEFAULT_PRIME), 1..5),
            c in 0u64..DEFAULT_PRIME,
        ) {
            let ring = ring_s();
            let f = Polynomial::from_terms(&ring, ta).unwrap();
            let g = Polynomial::from_terms(&ring, tb).unwrap();
            let m = Monomial::from_exps(vec![1, 1, 0, 0]);
            let r = f.combine(&ring, &g, c, &m).unwrap();
            prop_assert!(r.is_normalized());
        }

        #[test]
        fn text_round_trips(
            terms in prop::collection::vec((arb_monomial(3), 1u64..DEFAULT_PRIME), 0..6),
        ) {
            let ring = ring_s();
            let p = Polynomial::from_terms(&ring, terms).unwrap();
            let printed = poly_to_text(&ring, &p);
            prop_assert_eq!(poly_from_text(&ring, &printed).unwrap(), p);
        }
    }
}
