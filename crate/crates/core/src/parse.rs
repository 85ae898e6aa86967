//! Parser for the word input grammar.
//!
//! ```text
//! word   := factor { factor }
//! factor := atom [ '^' int ]
//! atom   := ident | '(' word ')' | '[' word ',' word ']' | '1'
//! ident  := letter { letter | digit | '_' }
//! int    := [ '-' ] digit { digit }
//! ```
//!
//! Juxtaposition is multiplication, `[u,v]` is the commutator, `1` is the
//! identity. Identifiers use maximal munch, so `xy` is one generator name;
//! separate factors with whitespace or brackets.

use num_bigint::BigInt;
use num_traits::One;
use thiserror::Error;

use crate::word::{Alphabet, Word, WordError};

#[derive(Debug, Error, PartialEq, Eq)]
pub enum ParseError {
    #[error("unexpected character {ch:?} at byte {pos}")]
    UnexpectedChar { pos: usize, ch: char },
    #[error("unexpected {found} at byte {pos}, expected {expected}")]
    UnexpectedToken { pos: usize, found: String, expected: &'static str },
    #[error("unexpected end of input, expected {expected}")]
    UnexpectedEnd { expected: &'static str },
    #[error("unknown generator {name:?} at byte {pos}")]
    UnknownGenerator { pos: usize, name: String },
    #[error(transparent)]
    Word(#[from] WordError),
}

#[derive(Debug, Clone, PartialEq)]
enum Tok {
    Ident(String),
    Number(BigInt),
    LParen,
    RParen,
    LBracket,
    RBracket,
    Comma,
    Caret,
    Minus,
}

impl Tok {
    fn describe(&self) -> String {
        match self {
            Tok::Ident(s) => format!("identifier {s:?}"),
            Tok::Number(n) => format!("number {n}"),
            Tok::LParen => "'('".into(),
            Tok::RParen => "')'".into(),
            Tok::LBracket => "'['".into(),
            Tok::RBracket => "']'".into(),
            Tok::Comma => "','".into(),
            Tok::Caret => "'^'".into(),
            Tok::Minus => "'-'".into(),
        }
    }
}

fn lex(input: &str) -> Result<Vec<(usize, Tok)>, ParseError> {
    let mut toks = Vec::new();
    let bytes = input.as_bytes();
    let mut i = 0;
    while i < bytes.len() {
        let c = bytes[i] as char;
        match c {
            ' ' | '\t' | '\r' | '\n' => i += 1,
            '(' => { toks.push((i, Tok::LParen)); i += 1 }
            ')' => { toks.push((i, Tok::RParen)); i += 1 }
            '[' => { toks.push((i, Tok::LBracket)); i += 1 }
            ']' => { toks.push((i, Tok::RBracket)); i += 1 }
            ',' => { toks.push((i, Tok::Comma)); i += 1 }
            '^' => { toks.push((i, Tok::Caret)); i += 1 }
            '-' => { toks.push((i, Tok::Minus)); i += 1 }
            c if c.is_ascii_digit() => {
                let start = i;
                while i < bytes.len() && (bytes[i] as char).is_ascii_digit() {
                    i += 1;
                }
                let n: BigInt = input[start..i].parse().expect("digits parse");
                toks.push((start, Tok::Number(n)));
            }
            c if c.is_ascii_alphabetic() => {
                let start = i;
                while i < bytes.len() {
                    let c = bytes[i] as char;
                    if c.is_ascii_alphanumeric() || c == '_' {
                        i += 1;
                    } else {
                        break;
                    }
                }
                toks.push((start, Tok::Ident(input[start..i].to_string())));
            }
            other => return Err(ParseError::UnexpectedChar { pos: i, ch: other }),
        }
    }
    Ok(toks)
}

struct Parser<'a> {
    alphabet: &'a Alphabet,
    toks: Vec<(usize, Tok)>,
    at: usize,
}

impl<'a> Parser<'a> {
    fn peek(&self) -> Option<&(usize, Tok)> {
        self.toks.get(self.at)
    }

    fn next(&mut self, expected: &'static str) -> Result<(usize, Tok), ParseError> {
        let t = self
            .toks
            .get(self.at)
            .cloned()
            .ok_or(ParseError::UnexpectedEnd { expected })?;
        self.at += 1;
        Ok(t)
    }

    fn expect(&mut self, want: Tok, expected: &'static str) -> Result<(), ParseError> {
        let (pos, t) = self.next(expected)?;
        if t == want {
            Ok(())
        } else {
            Err(ParseError::UnexpectedToken { pos, found: t.describe(), expected })
        }
    }

    /// True when the lookahead can start a factor.
    fn at_factor_start(&self) -> bool {
        matches!(
            self.peek(),
            Some((_, Tok::Ident(_))) | Some((_, Tok::LParen)) | Some((_, Tok::LBracket))
                | Some((_, Tok::Number(_)))
        )
    }

    fn word(&mut self) -> Result<Word, ParseError> {
        let mut acc = self.factor()?;
        while self.at_factor_start() {
            let f = self.factor()?;
            acc = acc.multiply(&f)?;
        }
        Ok(acc)
    }

    fn factor(&mut self) -> Result<Word, ParseError> {
        let atom = self.atom()?;
        if matches!(self.peek(), Some((_, Tok::Caret))) {
            self.at += 1;
            let exp = self.int()?;
            return Ok(atom.pow(&exp)?);
        }
        Ok(atom)
    }

    fn int(&mut self) -> Result<BigInt, ParseError> {
        let negative = if matches!(self.peek(), Some((_, Tok::Minus))) {
            self.at += 1;
            true
        } else {
            false
        };
        let (pos, t) = self.next("an integer")?;
        match t {
            Tok::Number(n) => Ok(if negative { -n } else { n }),
            other => Err(ParseError::UnexpectedToken {
                pos,
                found: other.describe(),
                expected: "an integer",
            }),
        }
    }

    fn atom(&mut self) -> Result<Word, ParseError> {
        let (pos, t) = self.next("a generator, '(', '[', or 1")?;
        match t {
            Tok::Ident(name) => match self.alphabet.index_of(&name) {
                Some(g) => Ok(Word::generator(self.alphabet, g)?),
                None => Err(ParseError::UnknownGenerator { pos, name }),
            },
            Tok::Number(n) if n.is_one() => Ok(Word::identity(self.alphabet)),
            Tok::LParen => {
                let w = self.word()?;
                self.expect(Tok::RParen, "')'")?;
                Ok(w)
            }
            Tok::LBracket => {
                let u = self.word()?;
                self.expect(Tok::Comma, "','")?;
                let v = self.word()?;
                self.expect(Tok::RBracket, "']'")?;
                Ok(u.commutator(&v)?)
            }
            other => Err(ParseError::UnexpectedToken {
                pos,
                found: other.describe(),
                expected: "a generator, '(', '[', or 1",
            }),
        }
    }
}

/// Parses a word in the input grammar over the given alphabet.
pub fn parse_word(alphabet: &Alphabet, input: &str) -> Result<Word, ParseError> {
    let toks = lex(input)?;
    let mut p = Parser { alphabet, toks, at: 0 };
    let w = p.word()?;
    if let Some((pos, t)) = p.peek() {
        return Err(ParseError::UnexpectedToken {
            pos: *pos,
            found: t.describe(),
            expected: "end of input",
        });
    }
    Ok(w)
}
