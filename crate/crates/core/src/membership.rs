//! Normal-closure membership evidence.
//!
//! A `Witness` is a checkable certificate: an explicit product of conjugated
//! relator powers equal to the word in question. `search_membership` tries to
//! find such evidence by rewriting: inserting cyclic permutations of relators
//! (or inverses) anywhere in the word and reducing, until the identity is
//! reached or the bounds run out. Every insertion stays in the same coset of
//! the normal closure, so a successful trace is sound and converts to a
//! witness; exhaustion proves nothing.

use std::cmp::Reverse;
use std::collections::{BTreeMap, BinaryHeap, HashSet};

use num_traits::{Signed, ToPrimitive};
use thiserror::Error;

use crate::intlin::{solve_left, IntMatrix};
use crate::word::{Alphabet, Syllable, Word, WordError};

/// Letter-expansion guard: words longer than this are not searched.
const LETTER_CAP: usize = 1 << 20;

/// One factor `conjugator * relator^sign * conjugator^-1` with sign +1 or -1.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct WitnessFactor {
    pub conjugator: Word,
    pub relator: usize,
    pub sign: i8,
}

/// A product of conjugated relator powers; validity is established only by
/// `check_witness`.
#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct Witness {
    pub factors: Vec<WitnessFactor>,
}

impl Witness {
    pub fn empty() -> Witness {
        Witness { factors: Vec::new() }
    }

    pub fn single(conjugator: Word, relator: usize, sign: i8) -> Witness {
        Witness { factors: vec![WitnessFactor { conjugator, relator, sign }] }
    }

    /// Concatenation: a witness for uv from witnesses for u and v.
    pub fn product(mut self, other: Witness) -> Witness {
        self.factors.extend(other.factors);
        self
    }

    /// Reversed factors with flipped signs: a witness for the inverse word.
    pub fn inverse(&self) -> Witness {
        Witness {
            factors: self
                .factors
                .iter()
                .rev()
                .map(|f| WitnessFactor {
                    conjugator: f.conjugator.clone(),
                    relator: f.relator,
                    sign: -f.sign,
                })
                .collect(),
        }
    }

    /// A witness for g w g^-1 from a witness for w.
    pub fn conjugated_by(&self, g: &Word) -> Result<Witness, WordError> {
        let factors = self
            .factors
            .iter()
            .map(|f| {
                Ok(WitnessFactor {
                    conjugator: g.multiply(&f.conjugator)?,
                    relator: f.relator,
                    sign: f.sign,
                })
            })
            .collect::<Result<_, WordError>>()?;
        Ok(Witness { factors })
    }
}

#[derive(Debug, Error, PartialEq, Eq)]
pub enum WitnessError {
    #[error("factor {factor} names relator {relator}, out of range")]
    RelatorOutOfRange { factor: usize, relator: usize },
    #[error("factor {factor} has sign {sign}; only +1 and -1 are allowed")]
    BadSign { factor: usize, sign: i8 },
    #[error(transparent)]
    Word(#[from] WordError),
}

/// Whether the freely reduced product of the witness factors equals `mu`.
pub fn check_witness(mu: &Word, witness: &Witness, relators: &[Word]) -> Result<bool, WitnessError> {
    let mut product = Word::identity(mu.alphabet());
    for (factor, f) in witness.factors.iter().enumerate() {
        if f.relator >= relators.len() {
            return Err(WitnessError::RelatorOutOfRange { factor, relator: f.relator });
        }
        if f.sign != 1 && f.sign != -1 {
            return Err(WitnessError::BadSign { factor, sign: f.sign });
        }
        let base = &relators[f.relator];
        let power = if f.sign == 1 { base.clone() } else { base.invert() };
        product = product.multiply(&power.conjugate_by(&f.conjugator)?)?;
    }
    Ok(product == *mu)
}

/// Per-relator signed factor counts, over every relator index (zeros
/// included). For a word of the intersection of two normal closures these
/// must all vanish under the certificate hypotheses; that balance is what
/// pushes such a word into the commutator subgroups.
pub fn exponent_balance(
    witness: &Witness,
    relators: &[Word],
) -> Result<BTreeMap<usize, i64>, WitnessError> {
    let mut balance: BTreeMap<usize, i64> = (0..relators.len()).map(|i| (i, 0)).collect();
    for (factor, f) in witness.factors.iter().enumerate() {
        if f.sign != 1 && f.sign != -1 {
            return Err(WitnessError::BadSign { factor, sign: f.sign });
        }
        match balance.get_mut(&f.relator) {
            Some(v) => *v += i64::from(f.sign),
            None => {
                return Err(WitnessError::RelatorOutOfRange { factor, relator: f.relator });
            }
        }
    }
    Ok(balance)
}

/// Witness for `[alpha, beta^e]` over the relator `[alpha, beta]` at index
/// `relator`, by peeling one `beta` at a time.
pub fn right_power_witness(relator: usize, beta: &Word, e: i64) -> Result<Witness, WordError> {
    let mut factors = Vec::new();
    if e >= 0 {
        for i in 0..e {
            factors.push(WitnessFactor {
                conjugator: beta.pow(&i.into())?,
                relator,
                sign: 1,
            });
        }
    } else {
        for i in 1..=(-e) {
            factors.push(WitnessFactor {
                conjugator: beta.pow(&(-i).into())?,
                relator,
                sign: -1,
            });
        }
    }
    Ok(Witness { factors })
}

/// Witness for `[alpha^e, beta]` over the relator `[alpha, beta]` at index
/// `relator`, by peeling one `alpha` at a time.
pub fn left_power_witness(relator: usize, alpha: &Word, e: i64) -> Result<Witness, WordError> {
    let mut factors = Vec::new();
    if e >= 0 {
        for i in (0..e).rev() {
            factors.push(WitnessFactor {
                conjugator: alpha.pow(&i.into())?,
                relator,
                sign: 1,
            });
        }
    } else {
        for i in (1..=(-e)).rev() {
            factors.push(WitnessFactor {
                conjugator: alpha.pow(&(-i).into())?,
                relator,
                sign: -1,
            });
        }
    }
    Ok(Witness { factors })
}

/// One rewrite: insert the cyclic permutation (by `shift`) of relator
/// `relator` (inverted first when `inverted`) at letter `position` of the
/// current word, then freely reduce.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RewriteStep {
    pub relator: usize,
    pub inverted: bool,
    pub shift: usize,
    pub position: usize,
}

/// Steps leading from the searched word to the identity.
#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct RewriteTrace {
    pub steps: Vec<RewriteStep>,
}

/// Outcome of a membership question. Only `Unknown` is inconclusive.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum MembershipEvidence {
    /// A caller-supplied witness (validated elsewhere via `check_witness`).
    Verified(Witness),
    /// A rewrite trace found by `search_membership`; replays to the identity.
    SearchProved(RewriteTrace),
    /// Bounds exhausted or an obstruction found; claims nothing.
    Unknown { note: String },
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct SearchBounds {
    /// Longest (letter-length) intermediate word kept.
    pub max_length: usize,
    /// Cap on distinct words created during the search.
    pub max_steps: usize,
}

impl SearchBounds {
    /// Generous defaults: room to double the word plus one relator, and a
    /// million states.
    pub fn defaults_for(mu: &Word, relators: &[Word]) -> SearchBounds {
        let mu_len = mu.letter_len().to_usize().unwrap_or(LETTER_CAP);
        let rel_len = relators
            .iter()
            .map(|r| r.letter_len().to_usize().unwrap_or(LETTER_CAP))
            .max()
            .unwrap_or(0);
        SearchBounds {
            max_length: 2 * mu_len + rel_len,
            max_steps: 1_000_000,
        }
    }
}

fn word_letters(w: &Word) -> Option<Vec<i16>> {
    let total = w.letter_len().to_usize()?;
    if total > LETTER_CAP {
        return None;
    }
    let mut out = Vec::with_capacity(total);
    for s in w.syllables() {
        let code = i16::try_from(s.gen + 1).ok()?;
        let reps = s.exp.abs().to_usize()?;
        let letter = if s.exp.is_negative() { -code } else { code };
        out.extend(std::iter::repeat(letter).take(reps));
    }
    Some(out)
}

fn word_from_letters(alphabet: &Alphabet, letters: &[i16]) -> Word {
    let syllables = letters
        .iter()
        .map(|&l| Syllable::new(usize::from(l.unsigned_abs()) - 1, if l < 0 { -1 } else { 1 }));
    Word::from_syllables(alphabet, syllables).expect("letters are in range")
}

fn push_cancel(out: &mut Vec<i16>, letter: i16) {
    if out.last() == Some(&-letter) {
        out.pop();
    } else {
        out.push(letter);
    }
}

/// `w` with `zeta` inserted at letter position `p`, freely reduced.
fn spliced(w: &[i16], p: usize, zeta: &[i16]) -> Vec<i16> {
    let mut out = Vec::with_capacity(w.len() + zeta.len());
    out.extend_from_slice(&w[..p]);
    for &l in zeta {
        push_cancel(&mut out, l);
    }
    for &l in &w[p..] {
        push_cancel(&mut out, l);
    }
    out
}

struct Move {
    letters: Vec<i16>,
    relator: usize,
    inverted: bool,
    shift: usize,
}

/// All distinct cyclic permutations of the relators and their inverses.
fn insertion_moves(relator_letters: &[Vec<i16>]) -> Vec<Move> {
    let mut seen: HashSet<Vec<i16>> = HashSet::new();
    let mut moves = Vec::new();
    for (relator, base) in relator_letters.iter().enumerate() {
        for inverted in [false, true] {
            let oriented: Vec<i16> = if inverted {
                base.iter().rev().map(|&l| -l).collect()
            } else {
                base.clone()
            };
            for shift in 0..oriented.len() {
                let mut zeta = oriented[shift..].to_vec();
                zeta.extend_from_slice(&oriented[..shift]);
                if seen.insert(zeta.clone()) {
                    moves.push(Move { letters: zeta, relator, inverted, shift });
                }
            }
        }
    }
    moves
}

struct Node {
    word: Vec<i16>,
    parent: usize,
    step: Option<RewriteStep>,
}

fn unwind(arena: &[Node], mut idx: usize, last: RewriteStep) -> RewriteTrace {
    let mut steps = vec![last];
    while let Some(step) = &arena[idx].step {
        steps.push(step.clone());
        idx = arena[idx].parent;
    }
    steps.reverse();
    RewriteTrace { steps }
}

/// Bounded best-first search for a rewrite proof that `mu` lies in the
/// normal closure of `relators`.
///
/// States are freely reduced words, explored shortest-first (ties broken by
/// depth, then discovery order), so large cancellations are chased eagerly.
/// Every edge multiplies by a conjugate of a relator, so any path to the
/// identity is a sound membership proof. A cheap abelianization check runs
/// first: if the exponent vector of `mu` is not an integer combination of
/// the relators', membership is impossible and the search is skipped — the
/// result is still `Unknown` because non-membership is not this function's
/// claim to make.
pub fn search_membership(
    mu: &Word,
    relators: &[Word],
    bounds: &SearchBounds,
) -> MembershipEvidence {
    if mu.is_identity() {
        return MembershipEvidence::SearchProved(RewriteTrace::default());
    }
    if relators.is_empty() {
        return MembershipEvidence::Unknown { note: "no relators to insert".into() };
    }
    if relators.iter().any(|r| r.alphabet() != mu.alphabet()) {
        return MembershipEvidence::Unknown { note: "relator alphabet mismatch".into() };
    }
    // Abelianization obstruction test.
    let exponent_rows: Vec<Vec<_>> = relators.iter().map(|r| r.exponent_vector()).collect();
    let matrix = IntMatrix::from_rows(relators.len(), mu.alphabet().rank(), exponent_rows);
    if solve_left(&matrix, &mu.exponent_vector()).is_none() {
        return MembershipEvidence::Unknown {
            note: "abelianization obstruction: exponent vector is not a combination of the relators'"
                .into(),
        };
    }
    let Some(mu_letters) = word_letters(mu) else {
        return MembershipEvidence::Unknown { note: "word too long to expand into letters".into() };
    };
    let mut relator_letters = Vec::with_capacity(relators.len());
    for r in relators {
        match word_letters(r) {
            Some(l) => relator_letters.push(l),
            None => {
                return MembershipEvidence::Unknown {
                    note: "relator too long to expand into letters".into(),
                }
            }
        }
    }
    let moves = insertion_moves(&relator_letters);

    let mut arena = vec![Node { word: mu_letters.clone(), parent: usize::MAX, step: None }];
    let mut visited: HashSet<Vec<i16>> = HashSet::from([mu_letters.clone()]);
    let mut heap = BinaryHeap::new();
    heap.push(Reverse((mu_letters.len(), 0u32, 0usize)));

    while let Some(Reverse((_, depth, idx))) = heap.pop() {
        let word = arena[idx].word.clone();
        for mv in &moves {
            for position in 0..=word.len() {
                let cand = spliced(&word, position, &mv.letters);
                if cand.len() > bounds.max_length || visited.contains(&cand) {
                    continue;
                }
                let step = RewriteStep {
                    relator: mv.relator,
                    inverted: mv.inverted,
                    shift: mv.shift,
                    position,
                };
                if cand.is_empty() {
                    return MembershipEvidence::SearchProved(unwind(&arena, idx, step));
                }
                if arena.len() >= bounds.max_steps {
                    return MembershipEvidence::Unknown {
                        note: format!("state budget exhausted ({} words)", bounds.max_steps),
                    };
                }
                visited.insert(cand.clone());
                heap.push(Reverse((cand.len(), depth + 1, arena.len())));
                arena.push(Node { word: cand, parent: idx, step: Some(step) });
            }
        }
    }
    MembershipEvidence::Unknown {
        note: "reachable words within the length bound exhausted".into(),
    }
}

#[derive(Debug, Error, PartialEq, Eq)]
pub enum ReplayError {
    #[error("step {step} names relator {relator}, out of range")]
    RelatorOutOfRange { step: usize, relator: usize },
    #[error("step {step} shift {shift} exceeds the relator length")]
    ShiftOutOfRange { step: usize, shift: usize },
    #[error("step {step} position {position} exceeds the current word length")]
    PositionOutOfRange { step: usize, position: usize },
    #[error("word too long to expand into letters")]
    WordTooLong,
}

fn oriented_relator(letters: &[i16], inverted: bool) -> Vec<i16> {
    if inverted {
        letters.iter().rev().map(|&l| -l).collect()
    } else {
        letters.to_vec()
    }
}

/// Applies a trace to `mu` and returns the resulting word; a valid
/// membership trace ends at the identity.
pub fn replay_trace(mu: &Word, relators: &[Word], trace: &RewriteTrace) -> Result<Word, ReplayError> {
    let mut current = word_letters(mu).ok_or(ReplayError::WordTooLong)?;
    for (index, step) in trace.steps.iter().enumerate() {
        let base = relators
            .get(step.relator)
            .ok_or(ReplayError::RelatorOutOfRange { step: index, relator: step.relator })?;
        let letters = word_letters(base).ok_or(ReplayError::WordTooLong)?;
        let oriented = oriented_relator(&letters, step.inverted);
        if step.shift >= oriented.len() {
            return Err(ReplayError::ShiftOutOfRange { step: index, shift: step.shift });
        }
        if step.position > current.len() {
            return Err(ReplayError::PositionOutOfRange { step: index, position: step.position });
        }
        let mut zeta = oriented[step.shift..].to_vec();
        zeta.extend_from_slice(&oriented[..step.shift]);
        current = spliced(&current, step.position, &zeta);
    }
    Ok(word_from_letters(mu.alphabet(), &current))
}

/// Converts a successful trace into witness form.
///
/// Inserting the shift-s permutation of rho at position p turns w into
/// g rho g^-1 w with g = w[..p] * rho[..s]^-1, so reading the steps forward
/// expresses `mu` as the product of g * rho^-1 * g^-1 over the trace.
pub fn trace_to_witness(
    mu: &Word,
    relators: &[Word],
    trace: &RewriteTrace,
) -> Result<Witness, ReplayError> {
    let alphabet = mu.alphabet();
    let mut current = word_letters(mu).ok_or(ReplayError::WordTooLong)?;
    let mut factors = Vec::with_capacity(trace.steps.len());
    for (index, step) in trace.steps.iter().enumerate() {
        let base = relators
            .get(step.relator)
            .ok_or(ReplayError::RelatorOutOfRange { step: index, relator: step.relator })?;
        let letters = word_letters(base).ok_or(ReplayError::WordTooLong)?;
        let oriented = oriented_relator(&letters, step.inverted);
        if step.shift >= oriented.len() {
            return Err(ReplayError::ShiftOutOfRange { step: index, shift: step.shift });
        }
        if step.position > current.len() {
            return Err(ReplayError::PositionOutOfRange { step: index, position: step.position });
        }
        let prefix = word_from_letters(alphabet, &current[..step.position]);
        let rho_prefix = word_from_letters(alphabet, &oriented[..step.shift]);
        let conjugator = prefix
            .multiply(&rho_prefix.invert())
            .expect("same alphabet by construction");
        factors.push(WitnessFactor {
            conjugator,
            relator: step.relator,
            // The step multiplied by rho^(step sign); mu unwinds with the
            // opposite sign.
            sign: if step.inverted { 1 } else { -1 },
        });
        let mut zeta = oriented[step.shift..].to_vec();
        zeta.extend_from_slice(&oriented[..step.shift]);
        current = spliced(&current, step.position, &zeta);
    }
    Ok(Witness { factors })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::parse::parse_word;
    use num_bigint::BigInt;

    fn ab2() -> Alphabet {
        Alphabet::new(vec!["x", "y"]).unwrap()
    }

    fn w(ab: &Alphabet, t: &str) -> Word {
        parse_word(ab, t).unwrap()
    }

    #[test]
    fn letters_round_trip() {
        let ab = ab2();
        for text in ["1", "x", "x^3 y^-2 x", "[x,y] y^5"] {
            let word = w(&ab, text);
            let letters = word_letters(&word).unwrap();
            assert_eq!(word_from_letters(&ab, &letters), word);
        }
        let huge = w(&ab, "x").pow(&BigInt::from(1u64 << 25)).unwrap();
        assert_eq!(word_letters(&huge), None);
    }

    #[test]
    fn witness_checking_basics() {
        let ab = ab2();
        let relators = vec![w(&ab, "[x,y]")];
        let r0 = relators[0].clone();

        let direct = Witness::single(Word::identity(&ab), 0, 1);
        assert!(check_witness(&r0, &direct, &relators).unwrap());
        assert_eq!(exponent_balance(&direct, &relators).unwrap(), BTreeMap::from([(0, 1)]));

        let conj = Witness::single(w(&ab, "x y"), 0, 1);
        let target = r0.conjugate_by(&w(&ab, "x y")).unwrap();
        assert!(check_witness(&target, &conj, &relators).unwrap());
        assert!(!check_witness(&r0, &conj, &relators).unwrap());

        let cancel = Witness::single(Word::identity(&ab), 0, 1)
            .product(Witness::single(w(&ab, "y"), 0, -1));
        assert_eq!(exponent_balance(&cancel, &relators).unwrap(), BTreeMap::from([(0, 0)]));

        let bad = Witness::single(Word::identity(&ab), 3, 1);
        assert_eq!(
            check_witness(&r0, &bad, &relators).unwrap_err(),
            WitnessError::RelatorOutOfRange { factor: 0, relator: 3 }
        );
        let bad_sign = Witness::single(Word::identity(&ab), 0, 2);
        assert_eq!(
            check_witness(&r0, &bad_sign, &relators).unwrap_err(),
            WitnessError::BadSign { factor: 0, sign: 2 }
        );
    }

    #[test]
    fn witness_combinators_compose() {
        let ab = ab2();
        let relators = vec![w(&ab, "[x,y]"), w(&ab, "x^2 y")];
        let w1 = Witness::single(w(&ab, "x"), 0, 1);
        let w2 = Witness::single(w(&ab, "y^-1"), 1, -1);
        let t1 = relators[0].conjugate_by(&w(&ab, "x")).unwrap();
        let t2 = relators[1].invert().conjugate_by(&w(&ab, "y^-1")).unwrap();

        let prod = w1.clone().product(w2.clone());
        let target = t1.multiply(&t2).unwrap();
        assert!(check_witness(&target, &prod, &relators).unwrap());
        assert!(check_witness(&target.invert(), &prod.inverse(), &relators).unwrap());
        let g = w(&ab, "y x^2");
        let conj = prod.conjugated_by(&g).unwrap();
        assert!(check_witness(&target.conjugate_by(&g).unwrap(), &conj, &relators).unwrap());
    }

    #[test]
    fn power_witnesses_hit_their_commutators() {
        let ab = ab2();
        // relator [x^2, y]: right powers vary y, left powers vary x^2.
        let relators = vec![w(&ab, "[x^2,y]")];
        let alpha = w(&ab, "x^2");
        let beta = w(&ab, "y");
        for e in -3..=3i64 {
            let target = alpha.commutator(&beta.pow(&e.into()).unwrap()).unwrap();
            let witness = right_power_witness(0, &beta, e).unwrap();
            assert!(check_witness(&target, &witness, &relators).unwrap(), "right e={e}");
        }
        let relators2 = vec![w(&ab, "[x,y^3]")];
        let alpha2 = w(&ab, "x");
        let beta2 = w(&ab, "y^3");
        for e in -3..=3i64 {
            let target = alpha2.pow(&e.into()).unwrap().commutator(&beta2).unwrap();
            let witness = left_power_witness(0, &alpha2, e).unwrap();
            assert!(check_witness(&target, &witness, &relators2).unwrap(), "left e={e}");
        }
    }

    #[test]
    fn search_finds_direct_and_conjugated_relators() {
        let ab = ab2();
        let relators = vec![w(&ab, "[x,y]")];
        let mu = relators[0].clone();
        let bounds = SearchBounds::defaults_for(&mu, &relators);
        match search_membership(&mu, &relators, &bounds) {
            MembershipEvidence::SearchProved(trace) => {
                assert_eq!(trace.steps.len(), 1);
                assert!(replay_trace(&mu, &relators, &trace).unwrap().is_identity());
                let witness = trace_to_witness(&mu, &relators, &trace).unwrap();
                assert!(check_witness(&mu, &witness, &relators).unwrap());
                assert_eq!(
                    exponent_balance(&witness, &relators).unwrap(),
                    BTreeMap::from([(0, 1)])
                );
            }
            other => panic!("expected proof, got {other:?}"),
        }

        let closure_of_x = vec![w(&ab, "x")];
        let mu = w(&ab, "y x y^-1");
        let bounds = SearchBounds::defaults_for(&mu, &closure_of_x);
        match search_membership(&mu, &closure_of_x, &bounds) {
            MembershipEvidence::SearchProved(trace) => {
                let witness = trace_to_witness(&mu, &closure_of_x, &trace).unwrap();
                assert!(check_witness(&mu, &witness, &closure_of_x).unwrap());
            }
            other => panic!("expected proof, got {other:?}"),
        }
    }

    #[test]
    fn search_respects_obstructions_and_budgets() {
        let ab = ab2();
        let relators = vec![w(&ab, "[x,y]")];
        let mu = w(&ab, "x");
        let bounds = SearchBounds::defaults_for(&mu, &relators);
        match search_membership(&mu, &relators, &bounds) {
            MembershipEvidence::Unknown { note } => assert!(note.contains("abelianization")),
            other => panic!("expected unknown, got {other:?}"),
        }

        // Balanced abelianization but (almost surely) not a member; the
        // search must stop at its budget without a false positive.
        let relators = vec![w(&ab, "[x,y^3]")];
        let mu = w(&ab, "[x,y]");
        let bounds = SearchBounds { max_length: 12, max_steps: 2000 };
        match search_membership(&mu, &relators, &bounds) {
            MembershipEvidence::Unknown { .. } => {}
            other => panic!("expected unknown, got {other:?}"),
        }

        let identity = Word::identity(&ab);
        match search_membership(&identity, &relators, &bounds) {
            MembershipEvidence::SearchProved(trace) => assert!(trace.steps.is_empty()),
            other => panic!("expected trivial proof, got {other:?}"),
        }
    }

    #[test]
    fn search_handles_cyclic_permutations() {
        // The normal closure of x y x^-1 equals that of y; reaching the
        // identity from y needs the shifted insertions.
        let ab = ab2();
        let relators = vec![w(&ab, "x y x^-1")];
        let mu = w(&ab, "y");
        let bounds = SearchBounds::defaults_for(&mu, &relators);
        match search_membership(&mu, &relators, &bounds) {
            MembershipEvidence::SearchProved(trace) => {
                let witness = trace_to_witness(&mu, &relators, &trace).unwrap();
                assert!(check_witness(&mu, &witness, &relators).unwrap());
            }
            other => panic!("expected proof, got {other:?}"),
        }
    }
}
