//! Lyndon-word coordinates on the graded pieces of the lower central series.
//!
//! For a free group F of finite rank, each quotient F_n/F_{n+1} is free
//! abelian, and the degree-n homogeneous component of a Magnus expansion
//! identifies it with the degree-n Lie elements inside the tensor algebra.
//! The standard bracketings of Lyndon words of length n form a basis there,
//! and each bracketing expands to its own word plus lexicographically greater
//! words, so coordinates fall out of a unitriangular back-substitution.

use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_traits::Zero;
use thiserror::Error;

use crate::intlin::IntMatrix;
use crate::magnus::{magnus_expand, Monomial};
use crate::word::Word;

/// All Lyndon words of exactly the given length over `rank` symbols, in
/// lexicographic order (Duval's generation).
pub fn lyndon_words(rank: usize, degree: usize) -> Vec<Monomial> {
    let mut out = Vec::new();
    if rank == 0 || degree == 0 {
        return out;
    }
    let mut w: Monomial = vec![0];
    loop {
        if w.len() == degree {
            out.push(w.clone());
        }
        // Extend periodically to the target length, then increment the last
        // non-maximal letter; the result is the next Lyndon word of length
        // <= degree.
        let m = w.len();
        let mut t: Monomial = (0..degree).map(|i| w[i % m]).collect();
        while t.last() == Some(&(rank - 1)) {
            t.pop();
        }
        match t.last_mut() {
            None => return out,
            Some(last) => *last += 1,
        }
        w = t;
    }
}

/// Splits a Lyndon word (length >= 2) as `u v` where `v` is its
/// lexicographically smallest proper suffix. Both halves are Lyndon and the
/// bracketing recurses through this split. Returns the index where `v`
/// starts.
pub fn standard_split(w: &[usize]) -> usize {
    let mut best = 1;
    for i in 2..w.len() {
        if w[i..] < w[best..] {
            best = i;
        }
    }
    best
}

/// Expands the standard bracketing of a Lyndon word into the tensor algebra:
/// single letters stand for themselves and `[u, v]` for `uv - vu`.
pub fn bracket_expansion(w: &[usize]) -> BTreeMap<Monomial, BigInt> {
    let mut out = BTreeMap::new();
    if w.len() == 1 {
        out.insert(w.to_vec(), BigInt::from(1));
        return out;
    }
    let cut = standard_split(w);
    let left = bracket_expansion(&w[..cut]);
    let right = bracket_expansion(&w[cut..]);
    for (m1, c1) in &left {
        for (m2, c2) in &right {
            let prod = c1 * c2;
            let mut uv = m1.clone();
            uv.extend_from_slice(m2);
            add_into(&mut out, uv, prod.clone());
            let mut vu = m2.clone();
            vu.extend_from_slice(m1);
            add_into(&mut out, vu, -prod);
        }
    }
    out
}

fn add_into(map: &mut BTreeMap<Monomial, BigInt>, key: Monomial, val: BigInt) {
    if val.is_zero() {
        return;
    }
    match map.get_mut(&key) {
        Some(c) => {
            *c += val;
            if c.is_zero() {
                map.remove(&key);
            }
        }
        None => {
            map.insert(key, val);
        }
    }
}

/// Integer coordinates of a class in F_n/F_{n+1}, over the Lyndon words of
/// length n in lexicographic order. Zero coordinates are not stored.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LieVector {
    degree: usize,
    rank: usize,
    coords: BTreeMap<Monomial, BigInt>,
}

impl LieVector {
    pub fn zero(rank: usize, degree: usize) -> LieVector {
        LieVector { degree, rank, coords: BTreeMap::new() }
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    /// Nonzero coordinates keyed by Lyndon word.
    pub fn coords(&self) -> &BTreeMap<Monomial, BigInt> {
        &self.coords
    }

    pub fn is_zero(&self) -> bool {
        self.coords.is_empty()
    }

    pub fn scalar_mul(&self, scalar: &BigInt) -> LieVector {
        let coords = if scalar.is_zero() {
            BTreeMap::new()
        } else {
            self.coords.iter().map(|(m, c)| (m.clone(), c * scalar)).collect()
        };
        LieVector { degree: self.degree, rank: self.rank, coords }
    }

    /// Dense coordinate row over the full Lyndon basis of this degree.
    pub fn dense(&self) -> Vec<BigInt> {
        lyndon_words(self.rank, self.degree)
            .iter()
            .map(|m| self.coords.get(m).cloned().unwrap_or_default())
            .collect()
    }
}

#[derive(Debug, Error, PartialEq, Eq)]
pub enum ClassError {
    #[error("word has lower-central weight {found}, below the requested degree {degree}")]
    WeightBelowDegree { degree: usize, found: usize },
    #[error("degree-{degree} component is not a Lie element")]
    NotLieElement { degree: usize },
}

#[derive(Debug, Error, PartialEq, Eq)]
pub enum ClassMatrixError {
    #[error("relator {index}: {source}")]
    Relator {
        index: usize,
        #[source]
        source: ClassError,
    },
}

/// Leading term of a word in the lower central series, as coordinates over
/// the Lyndon basis in the requested degree.
///
/// Requires weight(w) >= degree; the result is the zero vector exactly when
/// the word lies one term deeper (or is the identity). The degree-n component
/// of a group element's expansion is always a Lie element, so the
/// back-substitution consumes it exactly.
pub fn leading_lie_class(w: &Word, degree: usize) -> Result<LieVector, ClassError> {
    let rank = w.alphabet().rank();
    let series = magnus_expand(w, degree);
    if let Some(found) = series.min_nonconstant_degree() {
        if found < degree {
            return Err(ClassError::WeightBelowDegree { degree, found });
        }
    }
    let mut residual = series.homogeneous_component(degree);
    let mut coords = BTreeMap::new();
    for ell in lyndon_words(rank, degree) {
        let c = match residual.get(&ell) {
            Some(c) => c.clone(),
            None => continue,
        };
        // The bracketing of `ell` contributes 1 * ell and only greater words,
        // so this coefficient is final.
        for (m, bc) in bracket_expansion(&ell) {
            add_into(&mut residual, m, -(&c * bc));
        }
        coords.insert(ell, c);
    }
    if !residual.is_empty() {
        return Err(ClassError::NotLieElement { degree });
    }
    Ok(LieVector { degree, rank, coords })
}

/// Stacks the degree-n classes of the relators into an integer matrix, one
/// row per relator, columns indexed by the Lyndon basis.
pub fn relator_class_matrix(
    relators: &[Word],
    degree: usize,
) -> Result<IntMatrix, ClassMatrixError> {
    let rank = relators.first().map_or(0, |w| w.alphabet().rank());
    let basis_size = lyndon_words(rank, degree).len();
    let mut rows = Vec::with_capacity(relators.len());
    for (index, r) in relators.iter().enumerate() {
        let class = leading_lie_class(r, degree)
            .map_err(|source| ClassMatrixError::Relator { index, source })?;
        rows.push(class.dense());
    }
    Ok(IntMatrix::from_rows(relators.len(), basis_size, rows))
}
