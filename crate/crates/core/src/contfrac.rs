//! Exact continued-fraction machinery: quotient lists, convergent tables,
//! Farey pairs, Ostrowski decompositions, Stern-Brocot enumeration of
//! rationals in an interval, sparse quotient patterns and eventually-one
//! targets. Everything here is exact (`rug::Integer` / `rug::Rational`);
//! nothing knows about circle maps.
//!
//! Conventions: a continued fraction `[a_1, a_2, ...]` denotes
//! `1/(a_1 + 1/(a_2 + ...))`, all quotients >= 1, values in (0, 1].
//! Convergent tables are seeded with `p_0/q_0 = 0/1` (and the virtual
//! `p_{-1}/q_{-1} = 1/0` used by the recurrences).

use crate::{Error, Result};
use rug::{Integer, Rational};
use std::cmp::Ordering;
use std::fmt;
use std::str::FromStr;

// ---------------------------------------------------------------------------
// ContinuedFraction
// ---------------------------------------------------------------------------

/// A finite continued fraction `[a_1, ..., a_n]` with all quotients >= 1.
///
/// Two finite forms can denote the same value (`[.., b, 1] == [.., b+1]`);
/// equality compares canonicalized forms, `quotients()` exposes the raw list.
#[derive(Clone, Debug)]
pub struct ContinuedFraction {
    quotients: Vec<u64>,
}

impl ContinuedFraction {
    pub fn new(quotients: Vec<u64>) -> Result<Self> {
        if quotients.is_empty() {
            return Err(Error::InvalidParam("continued fraction needs at least one quotient".into()));
        }
        if let Some(&bad) = quotients.iter().find(|&&a| a == 0) {
            return Err(Error::InvalidParam(format!("quotient {bad} < 1")));
        }
        Ok(Self { quotients })
    }

    pub fn quotients(&self) -> &[u64] {
        &self.quotients
    }

    pub fn len(&self) -> usize {
        self.quotients.len()
    }

    pub fn is_empty(&self) -> bool {
        false // construction forbids empty quotient lists
    }

    /// True when the trailing quotient is not a removable 1.
    pub fn is_canonical(&self) -> bool {
        self.quotients.len() == 1 || *self.quotients.last().unwrap() != 1
    }

    /// Canonical form: `[.., b, 1]` becomes `[.., b+1]`; `[1]` stays `[1]`.
    pub fn canonical(&self) -> ContinuedFraction {
        let mut q = self.quotients.clone();
        if q.len() > 1 && *q.last().unwrap() == 1 {
            q.pop();
            *q.last_mut().unwrap() += 1;
        }
        ContinuedFraction { quotients: q }
    }

    /// The other finite form denoting the same value, when one exists:
    /// `[.., b+1] <-> [.., b, 1]`.
    pub fn dual(&self) -> Option<ContinuedFraction> {
        let mut q = self.quotients.clone();
        if q.len() > 1 && *q.last().unwrap() == 1 {
            q.pop();
            *q.last_mut().unwrap() += 1;
        } else if *q.last().unwrap() >= 2 {
            *q.last_mut().unwrap() -= 1;
            q.push(1);
        } else {
            return None; // "[1]" has no dual in (0, 1]
        }
        Some(ContinuedFraction { quotients: q })
    }

    /// Exact value in (0, 1].
    pub fn value(&self) -> Rational {
        self.convergents().value()
    }

    pub fn convergents(&self) -> ConvergentTable {
        ConvergentTable::from_quotients(&self.quotients)
    }
}

impl PartialEq for ContinuedFraction {
    fn eq(&self, other: &Self) -> bool {
        self.canonical().quotients == other.canonical().quotients
    }
}

impl Eq for ContinuedFraction {}

impl std::hash::Hash for ContinuedFraction {
    fn hash<H: std::hash::Hasher>(&self, state: &mut H) {
        self.canonical().quotients.hash(state);
    }
}

impl fmt::Display for ContinuedFraction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.quotients.iter().map(|a| a.to_string()).collect();
        write!(f, "{}", parts.join(","))
    }
}

impl FromStr for ContinuedFraction {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let quotients: std::result::Result<Vec<u64>, _> =
            s.split(',').map(|p| p.trim().parse::<u64>()).collect();
        match quotients {
            Ok(q) => ContinuedFraction::new(q),
            Err(e) => Err(Error::Parse(format!("bad quotient list {s:?}: {e}"))),
        }
    }
}

// ---------------------------------------------------------------------------
// ConvergentTable
// ---------------------------------------------------------------------------

/// Convergents `p_n/q_n` of a quotient list, `n = 0 ..= len`, with
/// `p_0/q_0 = 0/1` and `p_{n+1} = a_{n+1} p_n + p_{n-1}` (same for q).
#[derive(Clone, Debug)]
pub struct ConvergentTable {
    quotients: Vec<u64>,
    pq: Vec<(Integer, Integer)>,
}

impl ConvergentTable {
    pub fn from_quotients(quotients: &[u64]) -> Self {
        let mut pq = Vec::with_capacity(quotients.len() + 1);
        // virtual (p_{-1}, q_{-1}) = (1, 0) kept out of the table
        let (mut pm, mut qm) = (Integer::from(1), Integer::from(0));
        let (mut p, mut q) = (Integer::from(0), Integer::from(1));
        pq.push((p.clone(), q.clone()));
        for &a in quotients {
            let pn = Integer::from(a) * &p + &pm;
            let qn = Integer::from(a) * &q + &qm;
            pm = std::mem::replace(&mut p, pn);
            qm = std::mem::replace(&mut q, qn);
            pq.push((p.clone(), q.clone()));
        }
        Self { quotients: quotients.to_vec(), pq }
    }

    /// Number of quotients (table indices run 0 ..= len()).
    pub fn len(&self) -> usize {
        self.quotients.len()
    }

    pub fn is_empty(&self) -> bool {
        self.quotients.is_empty()
    }

    pub fn quotients(&self) -> &[u64] {
        &self.quotients
    }

    pub fn p(&self, n: usize) -> &Integer {
        &self.pq[n].0
    }

    pub fn q(&self, n: usize) -> &Integer {
        &self.pq[n].1
    }

    pub fn convergent(&self, n: usize) -> Rational {
        Rational::from((self.pq[n].0.clone(), self.pq[n].1.clone()))
    }

    /// Value of the full fraction (last convergent).
    pub fn value(&self) -> Rational {
        self.convergent(self.len())
    }

    /// `p_n q_{n+1} - p_{n+1} q_n`, which must be +-1.
    pub fn determinant(&self, n: usize) -> Integer {
        let a = Integer::from(&self.pq[n].0 * &self.pq[n + 1].1);
        let b = Integer::from(&self.pq[n + 1].0 * &self.pq[n].1);
        a - b
    }

    /// Checks `|p_n q_{n+1} - p_{n+1} q_n| = 1` for every adjacent pair.
    pub fn determinant_ok(&self) -> bool {
        (0..self.len()).all(|n| *self.determinant(n).as_abs() == 1u32)
    }

    /// Checks the alternation chain: even convergents strictly increase from
    /// below toward the value, odd ones strictly decrease from above.
    pub fn alternation_ok(&self) -> bool {
        let v = self.value();
        let n = self.len();
        for i in 0..=n {
            let c = self.convergent(i);
            let ok = if i == n {
                c == v
            } else if i % 2 == 0 {
                c < v
            } else {
                c > v
            };
            if !ok {
                return false;
            }
        }
        // monotone within each parity class
        let mut evens: Vec<Rational> = (0..=n).step_by(2).map(|i| self.convergent(i)).collect();
        let odds: Vec<Rational> = (1..=n).step_by(2).map(|i| self.convergent(i)).collect();
        let evens_ok = evens.windows(2).all(|w| w[0] < w[1]);
        let odds_ok = odds.windows(2).all(|w| w[0] > w[1]);
        evens.clear();
        evens_ok && odds_ok
    }
}

// ---------------------------------------------------------------------------
// Farey pairs
// ---------------------------------------------------------------------------

/// `|p q' - p' q| == 1` for x = p/q, y = p'/q' in lowest terms.
pub fn is_farey_pair(x: &Rational, y: &Rational) -> bool {
    let det = Integer::from(x.numer() * y.denom()) - Integer::from(y.numer() * x.denom());
    *det.as_abs() == 1u32
}

/// `(p + p') / (q + q')`, reduced. For a Farey pair the sum is already in
/// lowest terms and lies strictly between the endpoints.
pub fn mediant(x: &Rational, y: &Rational) -> Rational {
    Rational::from((
        Integer::from(x.numer() + y.numer()),
        Integer::from(x.denom() + y.denom()),
    ))
}

/// An ordered pair of Farey neighbors `lo < hi` with `|p q' - p' q| = 1`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FareyInterval {
    lo: Rational,
    hi: Rational,
}

impl FareyInterval {
    pub fn new(lo: Rational, hi: Rational) -> Result<Self> {
        if lo >= hi {
            return Err(Error::EmptyInterval(format!("{lo} >= {hi}")));
        }
        if !is_farey_pair(&lo, &hi) {
            return Err(Error::InvalidParam(format!("({lo}, {hi}) is not a Farey pair")));
        }
        Ok(Self { lo, hi })
    }

    pub fn lo(&self) -> &Rational {
        &self.lo
    }

    pub fn hi(&self) -> &Rational {
        &self.hi
    }

    pub fn mediant(&self) -> Rational {
        mediant(&self.lo, &self.hi)
    }

    /// Strict interior test.
    pub fn contains(&self, x: &Rational) -> bool {
        self.lo < *x && *x < self.hi
    }
}

// ---------------------------------------------------------------------------
// Expansion (exact and interval-certified)
// ---------------------------------------------------------------------------

/// How an expansion run ended.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum ExpandStatus {
    /// The input was rational and fully expanded.
    Terminated,
    /// The requested number of quotients was produced.
    MaxTerms,
    /// The interval endpoints disagree on the next quotient; the emitted
    /// prefix is certified, nothing beyond it is.
    PrecisionExhausted,
    /// A quotient exceeded u64; emitted prefix is certified.
    QuotientOverflow,
}

/// Expand an exact rational in (0, 1) by the Euclidean algorithm. The result
/// is the canonical form (no trailing removable 1).
pub fn cf_expand_rational(x: &Rational, max_terms: usize) -> Result<(ContinuedFraction, ExpandStatus)> {
    let zero = Rational::new();
    let one = Rational::from(1);
    if *x <= zero || *x >= one {
        return Err(Error::InvalidParam(format!("cf expansion needs 0 < x < 1, got {x}")));
    }
    let (digits, status) = expand_interval_core(x, x, max_terms);
    debug_assert!(!digits.is_empty());
    Ok((ContinuedFraction { quotients: digits }, status))
}

/// Expand from an interval `[lo, hi]` (0 < lo <= hi < 1): quotients are
/// emitted only while both endpoints agree on them, so every digit returned
/// is certified for every point of the interval.
pub fn cf_expand_interval(
    lo: &Rational,
    hi: &Rational,
    max_terms: usize,
) -> Result<(Vec<u64>, ExpandStatus)> {
    let zero = Rational::new();
    let one = Rational::from(1);
    if lo > hi {
        return Err(Error::EmptyInterval(format!("{lo} > {hi}")));
    }
    if *lo <= zero || *hi >= one {
        return Err(Error::InvalidParam(format!(
            "cf expansion needs 0 < lo <= hi < 1, got [{lo}, {hi}]"
        )));
    }
    Ok(expand_interval_core(lo, hi, max_terms))
}

fn expand_interval_core(lo: &Rational, hi: &Rational, max_terms: usize) -> (Vec<u64>, ExpandStatus) {
    let mut digits = Vec::new();
    let mut lo = lo.clone();
    let mut hi = hi.clone();
    let zero = Rational::new();
    loop {
        if digits.len() >= max_terms {
            return (digits, ExpandStatus::MaxTerms);
        }
        if lo == zero {
            // exact rational ran out exactly at the previous quotient
            return (digits, ExpandStatus::Terminated);
        }
        if hi == zero {
            // hi hit an exact value but lo continues: cannot certify further
            return (digits, ExpandStatus::PrecisionExhausted);
        }
        // 1/x is decreasing, so floor(1/hi) <= floor(1/lo)
        let inv_hi = Rational::from(hi.recip_ref());
        let inv_lo = Rational::from(lo.recip_ref());
        let a_lo = inv_hi.clone().floor();
        let a_hi = inv_lo.clone().floor();
        if a_lo != a_hi {
            return (digits, ExpandStatus::PrecisionExhausted);
        }
        let a_int = a_lo.numer().clone();
        let a = match a_int.to_u64() {
            Some(a) => a,
            None => return (digits, ExpandStatus::QuotientOverflow),
        };
        digits.push(a);
        // next interval: x -> 1/x - a, orientation flips
        let next_lo = inv_hi - Rational::from(&a_int);
        let next_hi = inv_lo - Rational::from(&a_int);
        lo = next_lo;
        hi = next_hi;
        if lo == zero && hi == zero {
            return (digits, ExpandStatus::Terminated);
        }
    }
}

// ---------------------------------------------------------------------------
// Ostrowski decomposition
// ---------------------------------------------------------------------------

/// Digits of `l` in the Ostrowski numeration of a convergent table:
/// `l = sum_i digits[i] * q_i` with `0 <= digits[i] <= a_{i+1}`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct OstrowskiDigits {
    digits: Vec<u64>,
}

impl OstrowskiDigits {
    /// Coefficient of `q_i`.
    pub fn digit(&self, i: usize) -> u64 {
        self.digits.get(i).copied().unwrap_or(0)
    }

    pub fn digits(&self) -> &[u64] {
        &self.digits
    }

    /// Exact value `sum_i digits[i] * q_i`.
    pub fn reconstruct(&self, table: &ConvergentTable) -> Integer {
        let mut acc = Integer::from(0);
        for (i, &k) in self.digits.iter().enumerate() {
            acc += Integer::from(k) * table.q(i);
        }
        acc
    }
}

/// Greedy Ostrowski decomposition of `1 <= l < q_len` over the table's `q_i`.
pub fn ostrowski_decompose(l: &Integer, table: &ConvergentTable) -> Result<OstrowskiDigits> {
    if *l < 1 {
        return Err(Error::InvalidParam(format!("ostrowski needs l >= 1, got {l}")));
    }
    let n = table.len();
    if *l >= *table.q(n) {
        return Err(Error::OutsideTable(format!(
            "l = {l} >= q_{n} = {}; extend the quotient list",
            table.q(n)
        )));
    }
    let mut digits = vec![0u64; n];
    let mut rem = l.clone();
    for i in (0..n).rev() {
        let (k, r) = rem.div_rem_floor(table.q(i).clone());
        // greedy bound: rem < q_{i+1} = a_{i+1} q_i + q_{i-1} <= (a_{i+1}+1) q_i
        let k = k.to_u64().expect("ostrowski digit exceeds u64");
        debug_assert!(k <= table.quotients()[i], "digit {k} exceeds quotient a_{}", i + 1);
        digits[i] = k;
        rem = r;
    }
    debug_assert_eq!(rem, 0);
    Ok(OstrowskiDigits { digits })
}

// ---------------------------------------------------------------------------
// Stern-Brocot / Farey enumeration
// ---------------------------------------------------------------------------

/// Farey neighbors of `x` at order `n`: the adjacent pair `(u, v)` in the
/// order-`n` Farey sequence with `u <= x < v`. Requires `0 <= x < 1`, n >= 1.
/// Descends the Stern-Brocot tree with quotient-sized jumps, so the cost is
/// proportional to the number of partial quotients, not to `n`.
pub fn farey_neighbors(x: &Rational, n: &Integer) -> Result<(Rational, Rational)> {
    let zero = Rational::new();
    let one = Rational::from(1);
    if *x < zero || *x >= one {
        return Err(Error::InvalidParam(format!("farey_neighbors needs 0 <= x < 1, got {x}")));
    }
    if *n < 1 {
        return Err(Error::InvalidParam(format!("farey order must be >= 1, got {n}")));
    }
    let u = x.numer();
    let w = x.denom();
    // lo = pl/ql <= x < ph/qh = hi, maintained adjacent (det 1)
    let (mut pl, mut ql) = (Integer::from(0), Integer::from(1));
    let (mut ph, mut qh) = (Integer::from(1), Integer::from(1));
    loop {
        let med_den = Integer::from(&ql + &qh);
        if med_den > *n {
            break;
        }
        let med_num = Integer::from(&pl + &ph);
        // mediant <= x  <=>  med_num * w <= u * med_den
        let lhs = Integer::from(&med_num * w);
        let rhs = Integer::from(u * &med_den);
        if lhs <= rhs {
            // step lo toward x: lo_k = (pl + k ph)/(ql + k qh) <= x
            // k * (ph w - u qh) <= u ql - pl w
            let c = Integer::from(&ph * w) - Integer::from(u * &qh); // > 0
            let d = Integer::from(u * &ql) - Integer::from(&pl * w); // >= 0
            let k_val = Integer::from(d.div_rem_floor(c).0);
            let k_den = Integer::from((n.clone() - &qh - &ql).div_rem_floor(qh.clone()).0) + 1;
            let k = k_val.min(k_den);
            debug_assert!(k >= 1);
            pl += Integer::from(&k * &ph);
            ql += Integer::from(&k * &qh);
        } else {
            // step hi toward x: hi_k = (k pl + ph)/(k ql + qh) > x
            // k * (u ql - pl w) < ph w - u qh   (coefficient >= 0)
            let c = Integer::from(u * &ql) - Integer::from(&pl * w); // >= 0
            let d = Integer::from(&ph * w) - Integer::from(u * &qh); // > 0
            let k_val = if c == 0 {
                None // every k keeps hi above x
            } else {
                // largest k with k*c < d  =>  k = ceil(d/c) - 1 = floor((d-1)/c)
                Some(Integer::from((d - 1u32).div_rem_floor(c).0))
            };
            let k_den = Integer::from((n.clone() - &qh - &ql).div_rem_floor(ql.clone()).0) + 1;
            let k = match k_val {
                Some(kv) => kv.min(k_den),
                None => k_den,
            };
            debug_assert!(k >= 1);
            ph += Integer::from(&k * &pl);
            qh += Integer::from(&k * &ql);
        }
    }
    debug_assert!(ql <= *n && qh <= *n);
    Ok((Rational::from((pl, ql)), Rational::from((ph, qh))))
}

/// All reduced fractions strictly inside the open interval `(lo, hi)` with
/// denominator strictly less than `max_den`, ascending. Walks the Farey
/// sequence by the neighbor recurrence, so the cost is proportional to the
/// output size (plus a Stern-Brocot descent to find the first element).
pub fn enumerate_rationals(lo: &Rational, hi: &Rational, max_den: &Integer) -> Result<Vec<Rational>> {
    if lo >= hi {
        return Err(Error::EmptyInterval(format!("({lo}, {hi})")));
    }
    let zero = Rational::new();
    let one = Rational::from(1);
    if *lo < zero || *hi > one {
        return Err(Error::InvalidParam(format!(
            "enumeration works inside [0, 1]: got ({lo}, {hi})"
        )));
    }
    let order = Integer::from(max_den - 1u32);
    if order < 1 {
        return Ok(Vec::new());
    }
    let (prev, cur) = farey_neighbors(lo, &order)?;
    let (mut pp, mut qp) = (prev.numer().clone(), prev.denom().clone());
    let (mut pc, mut qc) = (cur.numer().clone(), cur.denom().clone());
    let mut out = Vec::new();
    loop {
        let cur_val = Rational::from((pc.clone(), qc.clone()));
        if cur_val >= *hi {
            break;
        }
        out.push(cur_val);
        // next Farey-sequence element after (prev, cur):
        // k = floor((q_prev + order) / q_cur), next = k*cur - prev
        let k = Integer::from(&qp + &order).div_rem_floor(qc.clone()).0;
        let pn = Integer::from(&k * &pc) - &pp;
        let qn = Integer::from(&k * &qc) - &qp;
        pp = std::mem::replace(&mut pc, pn);
        qp = std::mem::replace(&mut qc, qn);
    }
    Ok(out)
}

// ---------------------------------------------------------------------------
// Sparse quotient patterns
// ---------------------------------------------------------------------------

/// A quotient sequence that is 1 everywhere except at finitely many even
/// positions `n_k` (strictly increasing), where it takes the value `A_k`.
#[derive(Clone, Debug, PartialEq, Eq, serde::Serialize, serde::Deserialize)]
pub struct QuotientPattern {
    markers: Vec<(usize, u64)>,
}

impl QuotientPattern {
    pub fn new(markers: Vec<(usize, u64)>) -> Result<Self> {
        let mut prev = 0usize;
        for &(pos, a) in &markers {
            if pos % 2 != 0 || pos == 0 {
                return Err(Error::InvalidParam(format!("marker position {pos} must be even and >= 2")));
            }
            if pos <= prev {
                return Err(Error::InvalidParam(format!(
                    "marker positions must strictly increase ({prev} then {pos})"
                )));
            }
            if a == 0 {
                return Err(Error::InvalidParam("marker quotient must be >= 1".into()));
            }
            prev = pos;
        }
        Ok(Self { markers })
    }

    pub fn markers(&self) -> &[(usize, u64)] {
        &self.markers
    }

    pub fn last_marker_pos(&self) -> usize {
        self.markers.last().map(|&(p, _)| p).unwrap_or(0)
    }

    /// Quotient at 1-based position `i`, honoring an optional terminal
    /// override `(position, value)` beyond the existing markers.
    pub fn digit(&self, i: usize, override_: Option<(usize, u64)>) -> u64 {
        if let Some((pos, a)) = override_ {
            if i == pos {
                return a;
            }
        }
        for &(pos, a) in &self.markers {
            if pos == i {
                return a;
            }
        }
        1
    }

    /// Expand to a finite quotient list of length `upto`.
    pub fn expand(&self, upto: usize, override_: Option<(usize, u64)>) -> Result<ContinuedFraction> {
        if upto == 0 {
            return Err(Error::InvalidParam("pattern expansion needs upto >= 1".into()));
        }
        if let Some((pos, a)) = override_ {
            if pos % 2 != 0 || pos <= self.last_marker_pos() {
                return Err(Error::InvalidParam(format!(
                    "override position {pos} must be even and beyond the last marker {}",
                    self.last_marker_pos()
                )));
            }
            if pos > upto {
                return Err(Error::InvalidParam(format!("override position {pos} > upto {upto}")));
            }
            if a == 0 {
                return Err(Error::InvalidParam("override quotient must be >= 1".into()));
            }
        }
        if self.last_marker_pos() > upto {
            return Err(Error::InvalidParam(format!(
                "upto {upto} cuts off a marker at {}",
                self.last_marker_pos()
            )));
        }
        let quotients = (1..=upto).map(|i| self.digit(i, override_)).collect();
        ContinuedFraction::new(quotients)
    }

    /// Add a marker after all existing ones.
    pub fn push_marker(&mut self, pos: usize, a: u64) -> Result<()> {
        let mut markers = self.markers.clone();
        markers.push((pos, a));
        *self = Self::new(markers)?;
        Ok(())
    }
}

// ---------------------------------------------------------------------------
// Eventually-one targets (quadratic irrationals)
// ---------------------------------------------------------------------------

/// An infinite quotient sequence that equals a finite prefix followed by all
/// ones. These are exactly the bounded-type targets the solver chases; the
/// value is the quadratic irrational `(p_N*phi + p_{N-1}) / (q_N*phi + q_{N-1})`
/// with `phi = (1+sqrt 5)/2`, which allows exact comparison against rationals.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Target {
    prefix: Vec<u64>,
}

/// Outcome of comparing a certified digit prefix against a [`Target`].
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum DigitCompare {
    /// The digits denote a value strictly below the target.
    Less,
    /// Strictly above.
    Greater,
    /// The digits agree with the target through their full length.
    AgreesThrough(usize),
}

impl Target {
    /// Empty prefix = the all-ones sequence (inverse golden ratio).
    pub fn golden() -> Self {
        Self { prefix: Vec::new() }
    }

    pub fn from_prefix(prefix: Vec<u64>) -> Result<Self> {
        if prefix.contains(&0) {
            return Err(Error::InvalidParam("target quotients must be >= 1".into()));
        }
        Ok(Self { prefix })
    }

    pub fn prefix(&self) -> &[u64] {
        &self.prefix
    }

    /// Quotient at 1-based position `i` (1 beyond the prefix).
    pub fn digit(&self, i: usize) -> u64 {
        assert!(i >= 1);
        self.prefix.get(i - 1).copied().unwrap_or(1)
    }

    /// Convergent table of the first `depth` quotients.
    pub fn table(&self, depth: usize) -> ConvergentTable {
        let quotients: Vec<u64> = (1..=depth).map(|i| self.digit(i)).collect();
        ConvergentTable::from_quotients(&quotients)
    }

    /// Exact comparison `target <=> r`. Never `Equal`: the target value is a
    /// quadratic irrational.
    pub fn cmp_rational(&self, r: &Rational) -> Ordering {
        let n = self.prefix.len();
        let table = self.table(n);
        let (pn, qn) = (table.p(n), table.q(n));
        let (pm, qm) = if n == 0 {
            (Integer::from(1), Integer::from(0))
        } else {
            (table.p(n - 1).clone(), table.q(n - 1).clone())
        };
        let u = r.numer();
        let w = r.denom();
        // sign( phi*(pn w - u qn) + (pm w - u qm) ), phi = (1+sqrt5)/2
        // = sign( A sqrt5 + (A + 2B) ) with A = pn w - u qn, B = pm w - u qm
        let a = Integer::from(pn * w) - Integer::from(u * qn);
        let b = Integer::from(&pm * w) - Integer::from(u * &qm);
        let s = Integer::from(&a + &b) + b;
        let sign = match a.cmp0() {
            Ordering::Equal => s.cmp0(),
            Ordering::Greater => {
                if s.cmp0() != Ordering::Less {
                    Ordering::Greater
                } else {
                    // compare 5 A^2 vs S^2
                    let lhs = Integer::from(&a * &a) * 5u32;
                    let rhs = Integer::from(&s * &s);
                    lhs.cmp(&rhs)
                }
            }
            Ordering::Less => {
                if s.cmp0() != Ordering::Greater {
                    Ordering::Less
                } else {
                    let lhs = Integer::from(&a * &a) * 5u32;
                    let rhs = Integer::from(&s * &s);
                    rhs.cmp(&lhs)
                }
            }
        };
        debug_assert_ne!(sign, Ordering::Equal, "quadratic irrational equals a rational");
        sign
    }

    /// The open interval of values whose first `depth` quotients match the
    /// target's: endpoints are the depth-convergent and the mediant with its
    /// predecessor, ordered.
    pub fn cylinder(&self, depth: usize) -> (Rational, Rational) {
        assert!(depth >= 1);
        let table = self.table(depth);
        let end_a = table.convergent(depth);
        let end_b = mediant(&table.convergent(depth), &table.convergent(depth - 1));
        if end_a < end_b {
            (end_a, end_b)
        } else {
            (end_b, end_a)
        }
    }

    /// Float approximation at the given precision (via sqrt 5).
    pub fn value(&self, prec: u32) -> rug::Float {
        let n = self.prefix.len();
        let table = self.table(n);
        let phi = (rug::Float::with_val(prec, 5).sqrt() + 1u32) / 2u32;
        let (pn, qn) = (table.p(n), table.q(n));
        let (pm, qm) = if n == 0 {
            (Integer::from(1), Integer::from(0))
        } else {
            (table.p(n - 1).clone(), table.q(n - 1).clone())
        };
        let num = rug::Float::with_val(prec, pn) * &phi + rug::Float::with_val(prec, &pm);
        let den = rug::Float::with_val(prec, qn) * &phi + rug::Float::with_val(prec, &qm);
        num / den
    }
}

/// Compare a certified digit prefix against a target by the alternating
/// lexicographic order: at the first differing 1-based position `i`, a larger
/// digit means a *smaller* value when `i` is odd and a larger value when `i`
/// is even.
pub fn compare_digits_to_target(digits: &[u64], target: &Target) -> DigitCompare {
    for (idx, &d) in digits.iter().enumerate() {
        let i = idx + 1;
        let t = target.digit(i);
        if d != t {
            let digit_larger = d > t;
            let odd = i % 2 == 1;
            return if digit_larger == odd {
                DigitCompare::Less
            } else {
                DigitCompare::Greater
            };
        }
    }
    DigitCompare::AgreesThrough(digits.len())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn rat(p: i64, q: i64) -> Rational {
        Rational::from((p, q))
    }

    #[test]
    fn value_of_1_2_3_is_7_tenths() {
        // 1/(1 + 1/(2 + 1/3)) = 1/(1 + 3/7) = 7/10, by hand
        let cf = ContinuedFraction::new(vec![1, 2, 3]).unwrap();
        assert_eq!(cf.value(), rat(7, 10));
    }

    #[test]
    fn expand_7_tenths() {
        let (cf, status) = cf_expand_rational(&rat(7, 10), 32).unwrap();
        assert_eq!(cf.quotients(), &[1, 2, 3]);
        assert_eq!(status, ExpandStatus::Terminated);
    }

    #[test]
    fn expand_one_half() {
        let (cf, status) = cf_expand_rational(&rat(1, 2), 32).unwrap();
        assert_eq!(cf.quotients(), &[2]);
        assert_eq!(status, ExpandStatus::Terminated);
    }

    #[test]
    fn expand_golden_from_interval() {
        // (sqrt5 - 1)/2 at 128 bits gives far more than ten certified ones
        let prec = 128;
        let root5 = rug::Float::with_val(prec, 5).sqrt();
        let g = (root5 - 1u32) / 2u32;
        let err = Rational::from((Integer::from(1), Integer::from(1) << 100));
        let gq = g.to_rational().unwrap();
        let lo = Rational::from(&gq - &err);
        let hi = Rational::from(&gq + &err);
        let (digits, status) = cf_expand_interval(&lo, &hi, 10).unwrap();
        assert_eq!(digits, vec![1; 10]);
        assert_eq!(status, ExpandStatus::MaxTerms);
    }

    #[test]
    fn interval_expansion_stops_where_endpoints_disagree() {
        // [0.61, 0.62] pins down only the leading quotient 1
        let (digits, status) = cf_expand_interval(&rat(61, 100), &rat(62, 100), 10).unwrap();
        assert!(!digits.is_empty());
        assert_eq!(status, ExpandStatus::PrecisionExhausted);
        // every certified digit must match both endpoint expansions
        let (lo_cf, _) = cf_expand_rational(&rat(61, 100), 32).unwrap();
        let (hi_cf, _) = cf_expand_rational(&rat(62, 100), 32).unwrap();
        for (i, &d) in digits.iter().enumerate() {
            assert_eq!(lo_cf.quotients()[i], d);
            assert_eq!(hi_cf.quotients()[i], d);
        }
    }

    #[test]
    fn fibonacci_denominators() {
        let table = ConvergentTable::from_quotients(&[1, 1, 1, 1, 1]);
        let qs: Vec<u32> = (0..=5).map(|n| table.q(n).to_u32().unwrap()).collect();
        assert_eq!(qs, vec![1, 1, 2, 3, 5, 8]);
        assert_eq!(table.value(), rat(5, 8));
        assert!(table.determinant_ok());
        assert!(table.alternation_ok());
    }

    #[test]
    fn convergents_of_1_2_3() {
        let table = ConvergentTable::from_quotients(&[1, 2, 3]);
        assert_eq!(table.convergent(3), rat(7, 10));
        assert_eq!(table.convergent(1), rat(1, 1));
        assert_eq!(table.convergent(2), rat(2, 3));
        assert!(table.determinant_ok());
        assert!(table.alternation_ok());
    }

    #[test]
    fn dual_forms_compare_equal() {
        let a = ContinuedFraction::new(vec![1, 2, 4]).unwrap();
        let b = ContinuedFraction::new(vec![1, 2, 3, 1]).unwrap();
        assert_eq!(a, b, "short and long finite forms denote the same value");
        assert_eq!(a.value(), b.value());
        assert_eq!(b.canonical().quotients(), &[1, 2, 4]);
        assert_eq!(a.dual().unwrap().quotients(), &[1, 2, 3, 1]);
        let one = ContinuedFraction::new(vec![1]).unwrap();
        assert!(one.dual().is_none());
    }

    #[test]
    fn display_parse_roundtrip() {
        let cf = ContinuedFraction::new(vec![1, 1, 7, 1]).unwrap();
        assert_eq!(cf.to_string(), "1,1,7,1");
        let back: ContinuedFraction = "1,1,7,1".parse().unwrap();
        assert_eq!(back.quotients(), cf.quotients());
        assert!("1,0,2".parse::<ContinuedFraction>().is_err());
    }

    #[test]
    fn ostrowski_of_seven_in_golden_table() {
        // q = (1,1,2,3,5): greedy gives 7 = 1*5 + 0*3 + 1*2 + 0 + 0
        let table = ConvergentTable::from_quotients(&[1, 1, 1, 1, 1]);
        let d = ostrowski_decompose(&Integer::from(7), &table).unwrap();
        assert_eq!(d.digits(), &[0, 0, 1, 0, 1]);
        assert_eq!(d.reconstruct(&table), 7);
    }

    #[test]
    fn ostrowski_rejects_out_of_range() {
        let table = ConvergentTable::from_quotients(&[1, 1, 1, 1, 1]);
        assert!(matches!(
            ostrowski_decompose(&Integer::from(8), &table),
            Err(Error::OutsideTable(_))
        ));
        assert!(ostrowski_decompose(&Integer::from(0), &table).is_err());
    }

    #[test]
    fn ostrowski_digits_bounded_and_exact() {
        let quotients = [2u64, 1, 4, 1, 3, 2];
        let table = ConvergentTable::from_quotients(&quotients);
        let qmax = table.q(table.len()).to_u64().unwrap();
        for l in 1..qmax {
            let d = ostrowski_decompose(&Integer::from(l), &table).unwrap();
            assert_eq!(d.reconstruct(&table), l, "reconstruction failed for l={l}");
            for (i, &k) in d.digits().iter().enumerate() {
                assert!(k <= quotients[i], "digit {k} at level {i} exceeds a_{}", i + 1);
            }
        }
    }

    #[test]
    fn mediant_and_farey() {
        assert!(is_farey_pair(&rat(1, 3), &rat(1, 2)));
        assert_eq!(mediant(&rat(1, 3), &rat(1, 2)), rat(2, 5));
        assert!(!is_farey_pair(&rat(1, 3), &rat(2, 3)));
        let fi = FareyInterval::new(rat(1, 3), rat(1, 2)).unwrap();
        assert!(fi.contains(&rat(2, 5)));
        assert!(!fi.contains(&rat(1, 3)));
        assert!(FareyInterval::new(rat(1, 3), rat(2, 3)).is_err());
        assert!(FareyInterval::new(rat(1, 2), rat(1, 3)).is_err());
    }

    #[test]
    fn enumerate_half_to_three_quarters() {
        let out = enumerate_rationals(&rat(1, 2), &rat(3, 4), &Integer::from(8)).unwrap();
        let expect = vec![rat(4, 7), rat(3, 5), rat(2, 3), rat(5, 7)];
        assert_eq!(out, expect, "denominators < 8 strictly inside (1/2, 3/4)");
    }

    #[test]
    fn enumerate_unit_interval_small_order() {
        let out = enumerate_rationals(&rat(0, 1), &rat(1, 1), &Integer::from(3)).unwrap();
        assert_eq!(out, vec![rat(1, 2)]);
    }

    #[test]
    fn enumeration_matches_brute_force() {
        let cases = [
            (rat(1, 2), rat(3, 4), 8i64),
            (rat(0, 1), rat(1, 1), 3),
            (rat(1, 7), rat(2, 7), 30),
            (rat(3, 8), rat(5, 8), 12),
            (rat(0, 1), rat(1, 10), 25),
        ];
        for (lo, hi, max_den) in cases {
            let fast = enumerate_rationals(&lo, &hi, &Integer::from(max_den)).unwrap();
            let mut brute = Vec::new();
            for q in 1..max_den {
                for p in 0..=q {
                    let r = Rational::from((p, q));
                    if r > lo && r < hi && !brute.contains(&r) {
                        brute.push(r);
                    }
                }
            }
            brute.sort();
            assert_eq!(fast, brute, "mismatch on ({lo}, {hi}) max_den {max_den}");
        }
    }

    #[test]
    fn neighbors_basic() {
        let (u, v) = farey_neighbors(&rat(1, 2), &Integer::from(5)).unwrap();
        assert_eq!((u, v), (rat(1, 2), rat(3, 5)));
        let (u, v) = farey_neighbors(&rat(0, 1), &Integer::from(7)).unwrap();
        assert_eq!((u, v), (rat(0, 1), rat(1, 7)));
    }

    #[test]
    fn pattern_expansion() {
        let p = QuotientPattern::new(vec![(4, 7)]).unwrap();
        let cf = p.expand(6, None).unwrap();
        assert_eq!(cf.quotients(), &[1, 1, 1, 7, 1, 1]);
        let cf = p.expand(6, Some((6, 3))).unwrap();
        assert_eq!(cf.quotients(), &[1, 1, 1, 7, 1, 3]);
    }

    #[test]
    fn pattern_validation() {
        assert!(QuotientPattern::new(vec![(3, 7)]).is_err(), "odd marker position");
        assert!(QuotientPattern::new(vec![(4, 7), (4, 2)]).is_err(), "non-increasing");
        assert!(QuotientPattern::new(vec![(4, 0)]).is_err(), "zero quotient");
        let p = QuotientPattern::new(vec![(4, 7)]).unwrap();
        assert!(p.expand(3, None).is_err(), "upto cuts off a marker");
        assert!(p.expand(6, Some((5, 3))).is_err(), "odd override position");
        assert!(p.expand(6, Some((2, 3))).is_err(), "override before last marker");
    }

    #[test]
    fn golden_target_comparisons() {
        let g = Target::golden();
        // (sqrt5-1)/2 = 0.618..., between 3/5 and 2/3
        assert_eq!(g.cmp_rational(&rat(3, 5)), Ordering::Greater);
        assert_eq!(g.cmp_rational(&rat(2, 3)), Ordering::Less);
        assert_eq!(g.cmp_rational(&rat(1, 2)), Ordering::Greater);
        let v = g.value(128).to_f64();
        assert!((v - 0.6180339887498949).abs() < 1e-15);
    }

    #[test]
    fn target_with_prefix() {
        // [2,1,1,1,...] = 1/(2 + g') where g' = golden tail... value ~ 0.38196
        let t = Target::from_prefix(vec![2]).unwrap();
        let v = t.value(96).to_f64();
        assert!((v - 0.3819660112501051).abs() < 1e-14, "got {v}");
        assert_eq!(t.cmp_rational(&rat(1, 3)), Ordering::Greater);
        assert_eq!(t.cmp_rational(&rat(2, 5)), Ordering::Less);
        assert_eq!(t.digit(1), 2);
        assert_eq!(t.digit(5), 1);
    }

    #[test]
    fn digit_comparison_parity() {
        let g = Target::golden();
        // [1,1,2] = 3/5 < g: difference at odd position 3, larger digit
        assert_eq!(compare_digits_to_target(&[1, 1, 2], &g), DigitCompare::Less);
        // [1,2] = 2/3 > g: difference at even position 2, larger digit
        assert_eq!(compare_digits_to_target(&[1, 2], &g), DigitCompare::Greater);
        // [2,...] = below 1/2 < g: odd position, larger digit
        assert_eq!(compare_digits_to_target(&[2], &g), DigitCompare::Less);
        assert_eq!(
            compare_digits_to_target(&[1, 1, 1, 1], &g),
            DigitCompare::AgreesThrough(4)
        );
    }

    #[test]
    fn cylinder_brackets_target() {
        let g = Target::golden();
        let (lo, hi) = g.cylinder(3);
        assert_eq!((lo.clone(), hi.clone()), (rat(3, 5), rat(2, 3)));
        assert_eq!(g.cmp_rational(&lo), Ordering::Greater);
        assert_eq!(g.cmp_rational(&hi), Ordering::Less);
    }

    #[test]
    fn cmp_rational_agrees_with_float_value() {
        let t = Target::from_prefix(vec![1, 1, 7, 2]).unwrap();
        let v = t.value(192);
        for (p, q) in [(1i64, 2i64), (5, 8), (3, 5), (377, 610), (13, 21), (55, 89)] {
            let r = rat(p, q);
            let expect = v
                .partial_cmp(&rug::Float::with_val(192, &r))
                .unwrap();
            assert_eq!(t.cmp_rational(&r), expect, "disagree at {p}/{q}");
        }
    }
}
