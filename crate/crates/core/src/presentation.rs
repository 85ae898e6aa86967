//! Group presentations, optionally split into two relator parts, plus the
//! cellular homology of the associated two-complex (one 0-cell, a 1-cell per
//! generator, a 2-cell per relator).

use num_bigint::BigInt;
use num_traits::One;
use thiserror::Error;

use crate::cockcroft::CockcroftCertificate;
use crate::intlin::{smith_normal_form, IntMatrix};
use crate::parse::{parse_word, ParseError};
use crate::word::{Alphabet, Word, WordError};

/// A finite presentation. When a partition is present, the relator list is
/// stored first-part-then-second-part and `split` marks the boundary.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Presentation {
    alphabet: Alphabet,
    relators: Vec<Word>,
    split: Option<usize>,
}

#[derive(Debug, Error, PartialEq, Eq)]
pub enum PresentationError {
    #[error("relator {index} reduces to the identity")]
    IdentityRelator { index: usize },
    #[error("relator {index} uses a different alphabet")]
    AlphabetMismatch { index: usize },
    #[error("both parts of a partitioned presentation must be nonempty")]
    EmptyPart,
}

impl Presentation {
    /// An unpartitioned presentation.
    pub fn new(alphabet: Alphabet, relators: Vec<Word>) -> Result<Presentation, PresentationError> {
        Self::validate(&alphabet, &relators)?;
        Ok(Presentation { alphabet, relators, split: None })
    }

    /// A presentation whose relators are split into two named parts.
    pub fn with_partition(
        alphabet: Alphabet,
        part_r: Vec<Word>,
        part_s: Vec<Word>,
    ) -> Result<Presentation, PresentationError> {
        if part_r.is_empty() || part_s.is_empty() {
            return Err(PresentationError::EmptyPart);
        }
        let split = part_r.len();
        let mut relators = part_r;
        relators.extend(part_s);
        Self::validate(&alphabet, &relators)?;
        Ok(Presentation { alphabet, relators, split: Some(split) })
    }

    fn validate(alphabet: &Alphabet, relators: &[Word]) -> Result<(), PresentationError> {
        for (index, r) in relators.iter().enumerate() {
            if r.alphabet() != alphabet {
                return Err(PresentationError::AlphabetMismatch { index });
            }
            if r.is_identity() {
                return Err(PresentationError::IdentityRelator { index });
            }
        }
        Ok(())
    }

    pub fn alphabet(&self) -> &Alphabet {
        &self.alphabet
    }

    pub fn relators(&self) -> &[Word] {
        &self.relators
    }

    pub fn is_partitioned(&self) -> bool {
        self.split.is_some()
    }

    pub fn part_r(&self) -> Option<&[Word]> {
        self.split.map(|k| &self.relators[..k])
    }

    pub fn part_s(&self) -> Option<&[Word]> {
        self.split.map(|k| &self.relators[k..])
    }

    pub fn partition_sizes(&self) -> Option<(usize, usize)> {
        self.split.map(|k| (k, self.relators.len() - k))
    }

    /// Same relators with the two parts swapped.
    pub fn swap_parts(&self) -> Option<Presentation> {
        let k = self.split?;
        let mut relators = self.relators[k..].to_vec();
        relators.extend_from_slice(&self.relators[..k]);
        Some(Presentation {
            alphabet: self.alphabet.clone(),
            relators,
            split: Some(self.relators.len() - k),
        })
    }

    /// Entry (i, j) is the exponent sum of generator j in relator i: the
    /// boundary map of the two-complex in the cellular chain basis.
    pub fn exponent_matrix(&self) -> IntMatrix {
        let rows = self
            .relators
            .iter()
            .map(|r| r.exponent_vector())
            .collect::<Vec<_>>();
        IntMatrix::from_rows(self.relators.len(), self.alphabet.rank(), rows)
    }

    /// First and second homology of the two-complex: H1 from the cokernel of
    /// the boundary map, H2 from its kernel (free, since there are no
    /// 3-cells).
    pub fn complex_homology(&self) -> HomologyReport {
        let snf = smith_normal_form(&self.exponent_matrix());
        let rank = snf.rank();
        let torsion: Vec<BigInt> = snf
            .invariant_factors
            .iter()
            .filter(|f| !f.is_one())
            .cloned()
            .collect();
        HomologyReport {
            h1_torsion: torsion,
            h1_free_rank: self.alphabet.rank() - rank,
            h2_free_rank: self.relators.len() - rank,
        }
    }
}

/// Integral homology of the model two-complex in degrees 1 and 2.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HomologyReport {
    /// Invariant factors of the torsion part of H1, each at least 2.
    pub h1_torsion: Vec<BigInt>,
    pub h1_free_rank: usize,
    /// H2 of a two-complex is free; this is its rank.
    pub h2_free_rank: usize,
}

/// Generator/relator bookkeeping that is meaningful once the complex is
/// certified: with the certificate in hand H2 of the group is free of the
/// same rank as H2 of the complex, so its minimal generator count is exact.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EfficiencyReport {
    pub generators: usize,
    pub relators: usize,
    /// generators - relators.
    pub deficiency: i64,
    pub h1_free_rank: usize,
    pub h2_min_generators: usize,
    /// Whether deficiency equals h1_free_rank - h2_min_generators.
    pub efficient: bool,
}

#[derive(Debug, Error, PartialEq, Eq)]
pub enum EfficiencyError {
    #[error("certificate does not match this presentation")]
    CertificateMismatch,
}

/// Efficiency bookkeeping, gated on a certificate because the minimal
/// generator count of H2 of the group is only known to equal the complex's
/// H2 rank in the certified case.
pub fn efficiency_report(
    p: &Presentation,
    cert: &CockcroftCertificate,
) -> Result<EfficiencyReport, EfficiencyError> {
    if !cert.matches(p) {
        return Err(EfficiencyError::CertificateMismatch);
    }
    let homology = p.complex_homology();
    let generators = p.alphabet().rank();
    let relators = p.relators().len();
    let deficiency = generators as i64 - relators as i64;
    let efficient = deficiency == homology.h1_free_rank as i64 - homology.h2_free_rank as i64;
    Ok(EfficiencyReport {
        generators,
        relators,
        deficiency,
        h1_free_rank: homology.h1_free_rank,
        h2_min_generators: homology.h2_free_rank,
        efficient,
    })
}

#[derive(Debug, Error, PartialEq, Eq)]
pub enum PresentationFileError {
    #[error("line {line}: expected a 'gens:' line before any relators")]
    GensNotFirst { line: usize },
    #[error("line {line}: duplicate 'gens:' line")]
    DuplicateGens { line: usize },
    #[error("line {line}: unknown directive {directive:?} (expected 'r:' or 's:')")]
    UnknownDirective { line: usize, directive: String },
    #[error("line {line}: {source}")]
    BadGenerators {
        line: usize,
        #[source]
        source: WordError,
    },
    #[error("line {line}: {source}")]
    BadWord {
        line: usize,
        #[source]
        source: ParseError,
    },
    #[error("line {line}: relator reduces to the identity")]
    IdentityRelator { line: usize },
    #[error("no 'gens:' line found")]
    MissingGens,
    #[error("no relator lines found")]
    MissingRelators,
    #[error(transparent)]
    Presentation(#[from] PresentationError),
}

/// Parses the presentation text format: one `gens: x y z` line, then
/// `r: <word>` and `s: <word>` lines in any order. Lines starting with `#`
/// and blank lines are ignored. A presentation with only `r:` lines is
/// unpartitioned; any `s:` line makes it partitioned.
pub fn parse_presentation(text: &str) -> Result<Presentation, PresentationFileError> {
    let mut alphabet: Option<Alphabet> = None;
    let mut part_r: Vec<(usize, Word)> = Vec::new();
    let mut part_s: Vec<(usize, Word)> = Vec::new();
    for (idx, raw) in text.lines().enumerate() {
        let line = idx + 1;
        let trimmed = raw.trim();
        if trimmed.is_empty() || trimmed.starts_with('#') {
            continue;
        }
        let Some((directive, rest)) = trimmed.split_once(':') else {
            return Err(PresentationFileError::UnknownDirective {
                line,
                directive: trimmed.to_string(),
            });
        };
        match directive.trim() {
            "gens" => {
                if alphabet.is_some() {
                    return Err(PresentationFileError::DuplicateGens { line });
                }
                let names: Vec<&str> = rest.split_whitespace().collect();
                let ab = Alphabet::new(names)
                    .map_err(|source| PresentationFileError::BadGenerators { line, source })?;
                alphabet = Some(ab);
            }
            part @ ("r" | "s") => {
                let Some(ab) = &alphabet else {
                    return Err(PresentationFileError::GensNotFirst { line });
                };
                let word = parse_word(ab, rest)
                    .map_err(|source| PresentationFileError::BadWord { line, source })?;
                if word.is_identity() {
                    return Err(PresentationFileError::IdentityRelator { line });
                }
                if part == "r" {
                    part_r.push((line, word));
                } else {
                    part_s.push((line, word));
                }
            }
            other => {
                return Err(PresentationFileError::UnknownDirective {
                    line,
                    directive: other.to_string(),
                });
            }
        }
    }
    let Some(alphabet) = alphabet else {
        return Err(PresentationFileError::MissingGens);
    };
    if part_r.is_empty() && part_s.is_empty() {
        return Err(PresentationFileError::MissingRelators);
    }
    let r_words: Vec<Word> = part_r.into_iter().map(|(_, w)| w).collect();
    let s_words: Vec<Word> = part_s.into_iter().map(|(_, w)| w).collect();
    if s_words.is_empty() {
        Ok(Presentation::new(alphabet, r_words)?)
    } else {
        Ok(Presentation::with_partition(alphabet, r_words, s_words)?)
    }
}
