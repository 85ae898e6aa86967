//! Freely reduced words over a finite generating alphabet.
//!
//! Words are stored in syllable (run-length) form: a sequence of
//! `(generator, exponent)` pairs with arbitrary-precision exponents, no zero
//! exponents, and no two adjacent syllables on the same generator. That normal
//! form is unique, so `x^a` costs O(1) syllables no matter how large `a` is,
//! and equality is structural.

use std::fmt;
use std::sync::Arc;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use thiserror::Error;

/// An ordered list of generator names. Cheap to clone; words carry one.
#[derive(Clone, Debug)]
pub struct Alphabet {
    names: Arc<Vec<String>>,
}

impl Alphabet {
    /// Builds an alphabet from generator names. Names must be nonempty and
    /// pairwise distinct.
    pub fn new<S: Into<String>>(names: Vec<S>) -> Result<Alphabet, WordError> {
        let names: Vec<String> = names.into_iter().map(Into::into).collect();
        for (i, n) in names.iter().enumerate() {
            if n.is_empty() {
                return Err(WordError::BadGeneratorName { name: n.clone() });
            }
            if names[..i].contains(n) {
                return Err(WordError::DuplicateGenerator { name: n.clone() });
            }
        }
        Ok(Alphabet { names: Arc::new(names) })
    }

    /// Number of generators.
    pub fn rank(&self) -> usize {
        self.names.len()
    }

    pub fn name(&self, gen: usize) -> &str {
        &self.names[gen]
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    /// Index of a generator by name.
    pub fn index_of(&self, name: &str) -> Option<usize> {
        self.names.iter().position(|n| n == name)
    }
}

impl PartialEq for Alphabet {
    fn eq(&self, other: &Self) -> bool {
        Arc::ptr_eq(&self.names, &other.names) || self.names == other.names
    }
}

impl Eq for Alphabet {}

impl std::hash::Hash for Alphabet {
    fn hash<H: std::hash::Hasher>(&self, state: &mut H) {
        self.names.hash(state);
    }
}

/// One run of a single generator: `gen^exp` with `exp != 0`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Syllable {
    pub gen: usize,
    pub exp: BigInt,
}

impl Syllable {
    pub fn new(gen: usize, exp: impl Into<BigInt>) -> Syllable {
        Syllable { gen, exp: exp.into() }
    }
}

#[derive(Debug, Error, PartialEq, Eq)]
pub enum WordError {
    #[error("generator name may not be empty: {name:?}")]
    BadGeneratorName { name: String },
    #[error("duplicate generator name {name:?}")]
    DuplicateGenerator { name: String },
    #[error("words belong to different alphabets")]
    AlphabetMismatch,
    #[error("generator index {index} out of range for rank {rank}")]
    GeneratorOutOfRange { index: usize, rank: usize },
    #[error("the identity has no root decomposition")]
    IdentityRoot,
    #[error("expanding this power needs {needed} syllables (limit {limit})")]
    PowerTooLarge { needed: usize, limit: usize },
}

/// Syllable count limit for expanding `w^n` of a multi-syllable `w`.
const POWER_SYLLABLE_LIMIT: usize = 1 << 20;

/// A freely reduced word. The syllable list is always in normal form:
/// nonzero exponents, adjacent syllables on distinct generators.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Word {
    alphabet: Alphabet,
    syllables: Vec<Syllable>,
}

impl Word {
    /// The empty word.
    pub fn identity(alphabet: &Alphabet) -> Word {
        Word { alphabet: alphabet.clone(), syllables: Vec::new() }
    }

    /// The word `gen^1`.
    pub fn generator(alphabet: &Alphabet, gen: usize) -> Result<Word, WordError> {
        Word::generator_pow(alphabet, gen, BigInt::one())
    }

    /// The word `gen^exp`.
    pub fn generator_pow(
        alphabet: &Alphabet,
        gen: usize,
        exp: impl Into<BigInt>,
    ) -> Result<Word, WordError> {
        if gen >= alphabet.rank() {
            return Err(WordError::GeneratorOutOfRange { index: gen, rank: alphabet.rank() });
        }
        let exp = exp.into();
        let syllables =
            if exp.is_zero() { Vec::new() } else { vec![Syllable { gen, exp }] };
        Ok(Word { alphabet: alphabet.clone(), syllables })
    }

    /// Builds a word from raw syllables, merging runs and dropping zero
    /// exponents so the result is freely reduced.
    pub fn from_syllables(
        alphabet: &Alphabet,
        syllables: impl IntoIterator<Item = Syllable>,
    ) -> Result<Word, WordError> {
        let mut out: Vec<Syllable> = Vec::new();
        for s in syllables {
            if s.gen >= alphabet.rank() {
                return Err(WordError::GeneratorOutOfRange {
                    index: s.gen,
                    rank: alphabet.rank(),
                });
            }
            push_reduced(&mut out, s);
        }
        Ok(Word { alphabet: alphabet.clone(), syllables: out })
    }

    pub fn alphabet(&self) -> &Alphabet {
        &self.alphabet
    }

    pub fn syllables(&self) -> &[Syllable] {
        &self.syllables
    }

    pub fn is_identity(&self) -> bool {
        self.syllables.is_empty()
    }

    /// Letter length: the sum of |exp| over all syllables.
    pub fn letter_len(&self) -> BigInt {
        self.syllables.iter().map(|s| s.exp.abs()).sum()
    }

    fn check_alphabet(&self, other: &Word) -> Result<(), WordError> {
        if self.alphabet == other.alphabet {
            Ok(())
        } else {
            Err(WordError::AlphabetMismatch)
        }
    }

    /// Free product `self * other`, freely reduced.
    pub fn multiply(&self, other: &Word) -> Result<Word, WordError> {
        self.check_alphabet(other)?;
        let mut out = self.syllables.clone();
        for s in &other.syllables {
            push_reduced(&mut out, s.clone());
        }
        Ok(Word { alphabet: self.alphabet.clone(), syllables: out })
    }

    /// The inverse word: syllables reversed with negated exponents.
    pub fn invert(&self) -> Word {
        let syllables = self
            .syllables
            .iter()
            .rev()
            .map(|s| Syllable { gen: s.gen, exp: -&s.exp })
            .collect();
        Word { alphabet: self.alphabet.clone(), syllables }
    }

    /// Commutator `[self, other] = self other self^-1 other^-1`.
    pub fn commutator(&self, other: &Word) -> Result<Word, WordError> {
        self.multiply(other)?
            .multiply(&self.invert())?
            .multiply(&other.invert())
    }

    /// Conjugate `g self g^-1`.
    pub fn conjugate_by(&self, g: &Word) -> Result<Word, WordError> {
        g.multiply(self)?.multiply(&g.invert())
    }

    /// `self^n`. Single-syllable words cost O(1); otherwise the cyclically
    /// reduced core is repeated, which is linear in |n| and refused past a
    /// syllable budget.
    pub fn pow(&self, n: &BigInt) -> Result<Word, WordError> {
        if n.is_zero() || self.is_identity() {
            return Ok(Word::identity(&self.alphabet));
        }
        if n.is_one() {
            return Ok(self.clone());
        }
        if self.syllables.len() == 1 {
            let s = &self.syllables[0];
            return Word::generator_pow(&self.alphabet, s.gen, &s.exp * n);
        }
        let (core, conj) = self.cyclic_reduce();
        let m = core.syllables.len();
        let reps: usize = n
            .abs()
            .try_into()
            .map_err(|_| WordError::PowerTooLarge { needed: usize::MAX, limit: POWER_SYLLABLE_LIMIT })?;
        let needed = m.saturating_mul(reps);
        if needed > POWER_SYLLABLE_LIMIT {
            return Err(WordError::PowerTooLarge { needed, limit: POWER_SYLLABLE_LIMIT });
        }
        let base = if n.is_negative() { core.invert() } else { core };
        let mut out = Vec::with_capacity(needed);
        for _ in 0..reps {
            for s in &base.syllables {
                push_reduced(&mut out, s.clone());
            }
        }
        let powered = Word { alphabet: self.alphabet.clone(), syllables: out };
        powered.conjugate_by(&conj)
    }

    /// Sum of exponents of one generator; the image under abelianization.
    pub fn exponent_sum(&self, gen: usize) -> Result<BigInt, WordError> {
        if gen >= self.alphabet.rank() {
            return Err(WordError::GeneratorOutOfRange { index: gen, rank: self.alphabet.rank() });
        }
        Ok(self
            .syllables
            .iter()
            .filter(|s| s.gen == gen)
            .map(|s| s.exp.clone())
            .sum())
    }

    /// Exponent-sum vector over the whole alphabet.
    pub fn exponent_vector(&self) -> Vec<BigInt> {
        let mut v = vec![BigInt::zero(); self.alphabet.rank()];
        for s in &self.syllables {
            v[s.gen] += &s.exp;
        }
        v
    }

    /// Splits `self = c w c^-1` with `w` cyclically reduced (its first and
    /// last letters are not inverse to each other). Returns `(w, c)`.
    pub fn cyclic_reduce(&self) -> (Word, Word) {
        let mut syl = self.syllables.clone();
        let mut conj: Vec<Syllable> = Vec::new();
        loop {
            let n = syl.len();
            if n < 2 {
                break;
            }
            let first = &syl[0];
            let last = &syl[n - 1];
            if first.gen != last.gen || first.exp.sign() == last.exp.sign() {
                break;
            }
            // Opposite-sign runs of the same generator wrap around; peel the
            // smaller run off both ends into the conjugator.
            let fa = first.exp.abs();
            let la = last.exp.abs();
            let take = fa.min(la.clone());
            let sign = if first.exp.is_negative() { -BigInt::one() } else { BigInt::one() };
            conj.push(Syllable { gen: first.gen, exp: &sign * &take });
            let head = &first.exp - &sign * &take;
            let tail = &last.exp + &sign * &take;
            if head.is_zero() {
                syl.remove(0);
            } else {
                syl[0].exp = head;
            }
            let n = syl.len();
            if tail.is_zero() {
                syl.pop();
            } else {
                syl[n - 1].exp = tail;
            }
            // A fully cancelled pair can expose two adjacent runs of one
            // generator at the wrap; merging them is the next loop pass.
            if syl.len() >= 2 {
                let n = syl.len();
                if syl[0].gen == syl[n - 1].gen && syl[0].exp.sign() == syl[n - 1].exp.sign() {
                    // Same-sign wrap: cyclically reduced, stop.
                    break;
                }
            }
        }
        let core = Word { alphabet: self.alphabet.clone(), syllables: syl };
        let conj = Word::from_syllables(&self.alphabet, conj).expect("conjugator syllables valid");
        (core, conj)
    }

    /// Writes `self = q^e` with `e` maximal (so `q` is not a proper power).
    /// Works on the syllable runs of the cyclically reduced core, so huge
    /// exponents never get expanded into letters.
    ///
    /// Errors on the identity, which is `q^e` for every `e`.
    pub fn root_decompose(&self) -> Result<(Word, BigInt), WordError> {
        if self.is_identity() {
            return Err(WordError::IdentityRoot);
        }
        let (core, conj) = self.cyclic_reduce();
        let (root_core, e) = root_of_cyclically_reduced(&core);
        let q = root_core.conjugate_by(&conj).expect("same alphabet");
        Ok((q, e))
    }
}

/// Appends one syllable to a reduced syllable stack, keeping it reduced.
fn push_reduced(out: &mut Vec<Syllable>, s: Syllable) {
    if s.exp.is_zero() {
        return;
    }
    match out.last_mut() {
        Some(top) if top.gen == s.gen => {
            top.exp += s.exp;
            if top.exp.is_zero() {
                out.pop();
            }
        }
        _ => out.push(s),
    }
}

/// Root of a cyclically reduced, nonidentity word.
fn root_of_cyclically_reduced(w: &Word) -> (Word, BigInt) {
    let syl = w.syllables();
    let m = syl.len();
    if m == 1 {
        // g^a = (g^sign)^|a|
        let s = &syl[0];
        let sign = if s.exp.is_negative() { -1 } else { 1 };
        let q = Word::generator_pow(w.alphabet(), s.gen, sign).expect("gen in range");
        return (q, s.exp.abs());
    }
    if syl[0].gen != syl[m - 1].gen {
        // The root's boundary generators differ too, so powers concatenate
        // without merging runs: the syllable list itself must be periodic.
        for e in divisors_desc(m) {
            if e == 1 {
                break;
            }
            let d = m / e;
            if (d..m).all(|i| syl[i] == syl[i - d]) {
                let q = Word {
                    alphabet: w.alphabet().clone(),
                    syllables: syl[..d].to_vec(),
                };
                return (q, BigInt::from(e));
            }
        }
    } else {
        // Boundary runs share a generator (and sign, else not cyclically
        // reduced). A root q = g^b v g^c repeated e times shows up as
        //   (g,b) block (g,b+c) block ... block (g,c)
        // with m = e*(|block|+1) + 1, so e runs over divisors of m-1.
        let junction = Syllable {
            gen: syl[0].gen,
            exp: &syl[0].exp + &syl[m - 1].exp,
        };
        'cand: for e in divisors_desc(m - 1) {
            if e == 1 {
                break;
            }
            let dp = (m - 1) / e; // block length + 1
            if dp < 2 {
                continue; // the root must contain a non-boundary generator
            }
            for j in 1..e {
                if syl[j * dp] != junction {
                    continue 'cand;
                }
            }
            let block = &syl[1..dp];
            for j in 1..e {
                if &syl[j * dp + 1..(j + 1) * dp] != block {
                    continue 'cand;
                }
            }
            let mut q_syl = Vec::with_capacity(dp + 1);
            q_syl.push(syl[0].clone());
            q_syl.extend_from_slice(block);
            q_syl.push(syl[m - 1].clone());
            let q = Word { alphabet: w.alphabet().clone(), syllables: q_syl };
            return (q, BigInt::from(e));
        }
    }
    (w.clone(), BigInt::one())
}

/// Divisors of n in decreasing order.
fn divisors_desc(n: usize) -> Vec<usize> {
    let mut divs = Vec::new();
    let mut d = 1;
    while d * d <= n {
        if n % d == 0 {
            divs.push(d);
            if d != n / d {
                divs.push(n / d);
            }
        }
        d += 1;
    }
    divs.sort_unstable_by(|a, b| b.cmp(a));
    divs
}

impl fmt::Display for Word {
    /// Prints in the input grammar: space-separated `name` or `name^exp`
    /// factors, `1` for the identity. Re-parses to an equal word.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_identity() {
            return write!(f, "1");
        }
        let mut first = true;
        for s in &self.syllables {
            if !first {
                write!(f, " ")?;
            }
            first = false;
            if s.exp.is_one() {
                write!(f, "{}", self.alphabet.name(s.gen))?;
            } else {
                write!(f, "{}^{}", self.alphabet.name(s.gen), s.exp)?;
            }
        }
        Ok(())
    }
}
