//! Truncated integer power series in noncommuting variables, and the Magnus
//! embedding of a free group into them.
//!
//! A generator g maps to `1 + X_g`, its inverse to the alternating geometric
//! series `1 - X_g + X_g^2 - ...`, and in general `g^a` maps to
//! `sum_j binom(a, j) X_g^j` for any integer `a`, where `binom` is the
//! generalized binomial coefficient. Products are truncated beyond a fixed
//! total degree. The embedding detects the lower central series exactly: a
//! word lies in the n-th term iff every nonconstant term of its expansion has
//! degree >= n.

use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::word::Word;

/// A monomial is a sequence of variable indices; the empty sequence is the
/// constant term.
pub type Monomial = Vec<usize>;

/// Sparse truncated series: only nonzero coefficients are stored, and every
/// stored monomial has degree at most `degree_bound`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TruncatedSeries {
    rank: usize,
    degree_bound: usize,
    terms: BTreeMap<Monomial, BigInt>,
}

impl TruncatedSeries {
    /// The zero series.
    pub fn zero(rank: usize, degree_bound: usize) -> TruncatedSeries {
        TruncatedSeries { rank, degree_bound, terms: BTreeMap::new() }
    }

    /// The constant series 1.
    pub fn one(rank: usize, degree_bound: usize) -> TruncatedSeries {
        let mut s = TruncatedSeries::zero(rank, degree_bound);
        s.terms.insert(Vec::new(), BigInt::one());
        s
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn degree_bound(&self) -> usize {
        self.degree_bound
    }

    /// Nonzero terms, keyed by monomial.
    pub fn terms(&self) -> &BTreeMap<Monomial, BigInt> {
        &self.terms
    }

    /// Terms sorted by (degree, lexicographic monomial); a stable order for
    /// printing.
    pub fn sorted_terms(&self) -> Vec<(&Monomial, &BigInt)> {
        let mut v: Vec<_> = self.terms.iter().collect();
        v.sort_by(|(m1, _), (m2, _)| m1.len().cmp(&m2.len()).then_with(|| m1.cmp(m2)));
        v
    }

    /// Adds `coef * monomial` in place, dropping the entry if it cancels.
    pub fn add_term(&mut self, monomial: Monomial, coef: &BigInt) {
        if coef.is_zero() || monomial.len() > self.degree_bound {
            return;
        }
        debug_assert!(monomial.iter().all(|&v| v < self.rank));
        match self.terms.get_mut(&monomial) {
            Some(c) => {
                *c += coef;
                if c.is_zero() {
                    self.terms.remove(&monomial);
                }
            }
            None => {
                self.terms.insert(monomial, coef.clone());
            }
        }
    }

    pub fn add(&self, other: &TruncatedSeries) -> TruncatedSeries {
        assert_eq!(self.rank, other.rank, "series rank mismatch");
        assert_eq!(self.degree_bound, other.degree_bound, "series bound mismatch");
        let mut out = self.clone();
        for (m, c) in &other.terms {
            out.add_term(m.clone(), c);
        }
        out
    }

    /// Truncated product: monomials concatenate, terms past the degree bound
    /// are dropped.
    pub fn mul(&self, other: &TruncatedSeries) -> TruncatedSeries {
        assert_eq!(self.rank, other.rank, "series rank mismatch");
        assert_eq!(self.degree_bound, other.degree_bound, "series bound mismatch");
        let mut out = TruncatedSeries::zero(self.rank, self.degree_bound);
        for (m1, c1) in &self.terms {
            let room = self.degree_bound - m1.len();
            for (m2, c2) in &other.terms {
                if m2.len() > room {
                    continue;
                }
                let mut m = Vec::with_capacity(m1.len() + m2.len());
                m.extend_from_slice(m1);
                m.extend_from_slice(m2);
                out.add_term(m, &(c1 * c2));
            }
        }
        out
    }

    pub fn is_one(&self) -> bool {
        self.terms.len() == 1
            && self.terms.get(&Vec::new() as &Monomial).is_some_and(|c| c.is_one())
    }

    /// Smallest degree >= 1 carrying a nonzero term.
    pub fn min_nonconstant_degree(&self) -> Option<usize> {
        self.terms
            .keys()
            .filter(|m| !m.is_empty())
            .map(|m| m.len())
            .min()
    }

    /// All terms of exactly the given degree.
    pub fn homogeneous_component(&self, degree: usize) -> BTreeMap<Monomial, BigInt> {
        self.terms
            .iter()
            .filter(|(m, _)| m.len() == degree)
            .map(|(m, c)| (m.clone(), c.clone()))
            .collect()
    }
}

/// Series for one syllable `g^a`: `sum_j binom(a, j) X_g^j` truncated.
///
/// The binomial stream runs `c_0 = 1`, `c_j = c_{j-1} (a - j + 1) / j` with
/// exact integer division, so the cost is polynomial in the degree bound and
/// independent of |a|.
fn syllable_series(rank: usize, degree_bound: usize, gen: usize, exp: &BigInt) -> TruncatedSeries {
    let mut s = TruncatedSeries::zero(rank, degree_bound);
    let mut coef = BigInt::one();
    s.add_term(Vec::new(), &coef);
    for j in 1..=degree_bound {
        coef = coef * (exp - BigInt::from(j - 1)) / BigInt::from(j);
        if coef.is_zero() {
            break; // a >= 0 and j > a: all later binomials vanish
        }
        s.add_term(vec![gen; j], &coef);
    }
    s
}

/// Magnus expansion of a word, truncated past `degree_bound`.
pub fn magnus_expand(w: &Word, degree_bound: usize) -> TruncatedSeries {
    let rank = w.alphabet().rank();
    let mut acc = TruncatedSeries::one(rank, degree_bound);
    for s in w.syllables() {
        let factor = syllable_series(rank, degree_bound, s.gen, &s.exp);
        acc = acc.mul(&factor);
    }
    acc
}

/// Position of a word in the lower central series, as far as a degree bound
/// can see.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum WeightResult {
    /// The identity lies in every term.
    Identity,
    /// The word lies in term `n` but not `n + 1`.
    Weight(usize),
    /// The word lies in every term up to and including the bound.
    ExceedsBound(usize),
}

impl WeightResult {
    /// The finite weight, if the bound resolved one.
    pub fn finite(&self) -> Option<usize> {
        match self {
            WeightResult::Weight(n) => Some(*n),
            _ => None,
        }
    }
}

/// Lower-central weight of `w`: the largest `n <= d_max` with `w` in the n-th
/// term, reported exactly when it is at most `d_max`.
///
/// Probes with doubling degree bounds so shallow words never pay for the full
/// bound.
pub fn lcs_weight(w: &Word, d_max: usize) -> WeightResult {
    if w.is_identity() {
        return WeightResult::Identity;
    }
    let mut d = 1.min(d_max);
    loop {
        let series = magnus_expand(w, d);
        if let Some(n) = series.min_nonconstant_degree() {
            return WeightResult::Weight(n);
        }
        if d >= d_max {
            return WeightResult::ExceedsBound(d_max);
        }
        d = (d * 2).min(d_max);
    }
}
