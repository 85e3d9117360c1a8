//! Normal forms in free products of cyclic groups, and word templates.

use std::cmp::Ordering;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{LabError, Result};

/// A cyclic free factor; `order == 0` means infinite cyclic.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Factor {
    pub letter: char,
    pub order: u32,
}

impl Factor {
    pub fn infinite(letter: char) -> Self {
        Factor { letter, order: 0 }
    }

    pub fn finite(letter: char, order: u32) -> Self {
        Factor { letter, order }
    }
}

/// `x_factor ^ exp` with `exp` reduced into `(-m/2, m/2]` for finite order `m`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Syllable {
    pub factor: u8,
    pub exp: i32,
}

/// A reduced word: consecutive syllables lie in different factors, no zero exponents.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Word(Vec<Syllable>);

impl Word {
    pub fn identity() -> Self {
        Word(Vec::new())
    }

    pub fn is_identity(&self) -> bool {
        self.0.is_empty()
    }

    pub fn syllables(&self) -> &[Syllable] {
        &self.0
    }

    pub fn first(&self) -> Option<Syllable> {
        self.0.first().copied()
    }

    pub fn last(&self) -> Option<Syllable> {
        self.0.last().copied()
    }

    /// Drops the first syllable if it lies in `factor`.
    pub fn strip_leading(&self, factor: u8) -> Word {
        match self.0.first() {
            Some(s) if s.factor == factor => Word(self.0[1..].to_vec()),
            _ => self.clone(),
        }
    }

    /// Drops the last syllable if it lies in `factor`.
    pub fn strip_trailing(&self, factor: u8) -> Word {
        match self.0.last() {
            Some(s) if s.factor == factor => Word(self.0[..self.0.len() - 1].to_vec()),
            _ => self.clone(),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Alphabet {
    factors: Vec<Factor>,
}

impl Alphabet {
    pub fn new(factors: Vec<Factor>) -> Result<Self> {
        if factors.len() > u8::MAX as usize {
            return Err(LabError::InvalidArgument("at most 255 factors".into()));
        }
        for (i, f) in factors.iter().enumerate() {
            if !f.letter.is_ascii_lowercase() || f.letter == 'e' || f.letter == 'n' {
                return Err(LabError::InvalidArgument(format!(
                    "generator letter `{}` must be lowercase ascii other than `e` and `n`",
                    f.letter
                )));
            }
            if f.order == 1 {
                return Err(LabError::InvalidArgument(format!("factor `{}` is trivial", f.letter)));
            }
            if factors[..i].iter().any(|g| g.letter == f.letter) {
                return Err(LabError::InvalidArgument(format!("letter `{}` repeated", f.letter)));
            }
        }
        Ok(Alphabet { factors })
    }

    /// Free group of the given rank on letters `a, b, c, d, f, g, ...`.
    pub fn free(rank: usize) -> Result<Self> {
        let letters: Vec<char> = ('a'..='z').filter(|&c| c != 'e' && c != 'n').take(rank).collect();
        if letters.len() != rank || rank == 0 {
            return Err(LabError::InvalidArgument(format!("unsupported rank {rank}")));
        }
        Alphabet::new(letters.into_iter().map(Factor::infinite).collect())
    }

    pub fn factors(&self) -> &[Factor] {
        &self.factors
    }

    pub fn order(&self, factor: u8) -> u32 {
        self.factors[factor as usize].order
    }

    pub fn factor_of(&self, letter: char) -> Option<u8> {
        self.factors.iter().position(|f| f.letter == letter).map(|i| i as u8)
    }

    pub fn reduce_exp(&self, factor: u8, e: i64) -> i32 {
        let m = self.order(factor) as i64;
        if m == 0 {
            return e as i32;
        }
        let r = e.rem_euclid(m);
        (if 2 * r > m { r - m } else { r }) as i32
    }

    fn push(&self, out: &mut Vec<Syllable>, s: Syllable) {
        let exp = self.reduce_exp(s.factor, s.exp as i64);
        if exp == 0 {
            return;
        }
        if let Some(last) = out.last_mut() {
            if last.factor == s.factor {
                let merged = self.reduce_exp(s.factor, last.exp as i64 + exp as i64);
                if merged == 0 {
                    out.pop();
                } else {
                    last.exp = merged;
                }
                return;
            }
        }
        out.push(Syllable { factor: s.factor, exp });
    }

    /// Reduces an arbitrary syllable list.
    pub fn normalize(&self, syllables: &[Syllable]) -> Word {
        let mut out = Vec::with_capacity(syllables.len());
        for &s in syllables {
            self.push(&mut out, s);
        }
        Word(out)
    }

    pub fn syllable(&self, factor: u8, exp: i64) -> Word {
        let exp = self.reduce_exp(factor, exp);
        if exp == 0 {
            Word::identity()
        } else {
            Word(vec![Syllable { factor, exp }])
        }
    }

    pub fn mul(&self, a: &Word, b: &Word) -> Word {
        let mut out = a.0.clone();
        for &s in &b.0 {
            self.push(&mut out, s);
        }
        Word(out)
    }

    pub fn inverse(&self, w: &Word) -> Word {
        let v = w
            .0
            .iter()
            .rev()
            .map(|s| Syllable {
                factor: s.factor,
                exp: self.reduce_exp(s.factor, -(s.exp as i64)),
            })
            .collect();
        Word(v)
    }

    pub fn pow(&self, w: &Word, n: i64) -> Word {
        let base = if n < 0 { self.inverse(w) } else { w.clone() };
        let mut acc = Word::identity();
        let mut sq = base;
        let mut k = n.unsigned_abs();
        while k > 0 {
            if k & 1 == 1 {
                acc = self.mul(&acc, &sq);
            }
            k >>= 1;
            if k > 0 {
                sq = self.mul(&sq, &sq);
            }
        }
        acc
    }

    /// The symmetric Cayley generating set in canonical order: `x, x⁻¹` per factor,
    /// with a single entry for involutions.
    pub fn generators(&self) -> Vec<Word> {
        let mut out = Vec::new();
        for i in 0..self.factors.len() as u8 {
            out.push(self.syllable(i, 1));
            if self.order(i) != 2 {
                out.push(self.syllable(i, -1));
            }
        }
        out
    }

    pub fn cayley_len(&self, w: &Word) -> u32 {
        w.0.iter().map(|s| s.exp.unsigned_abs()).sum()
    }

    /// Length after coning off every factor: each syllable costs at most 2.
    pub fn coned_len(&self, w: &Word) -> u32 {
        w.0.iter().map(|s| s.exp.unsigned_abs().min(2)).sum()
    }

    /// Unit steps `(factor, ±1)` spelling the word.
    pub fn letters(&self, w: &Word) -> Vec<(u8, i8)> {
        let mut out = Vec::with_capacity(self.cayley_len(w) as usize);
        for s in &w.0 {
            let sign = if s.exp > 0 { 1 } else { -1 };
            out.extend(std::iter::repeat_n((s.factor, sign), s.exp.unsigned_abs() as usize));
        }
        out
    }

    /// Shortlex order with letters ranked `a < a⁻¹ < b < b⁻¹ < ...`.
    pub fn shortlex_cmp(&self, a: &Word, b: &Word) -> Ordering {
        let key = |w: &Word| {
            self.letters(w)
                .into_iter()
                .map(|(f, s)| 2 * f as u32 + (s < 0) as u32)
                .collect::<Vec<_>>()
        };
        self.cayley_len(a)
            .cmp(&self.cayley_len(b))
            .then_with(|| key(a).cmp(&key(b)))
    }

    pub fn format(&self, w: &Word) -> String {
        if w.is_identity() {
            return "e".into();
        }
        let mut out = String::new();
        for s in &w.0 {
            let letter = self.factors[s.factor as usize].letter;
            let (c, k) = if s.exp > 0 {
                (letter, s.exp)
            } else {
                (letter.to_ascii_uppercase(), -s.exp)
            };
            out.push(c);
            if k > 1 {
                out.push('^');
                out.push_str(&k.to_string());
            }
        }
        out
    }

    pub fn parse(&self, s: &str) -> Result<Word> {
        let t = WordTemplate::parse(self, s)?;
        if t.has_param() {
            return Err(LabError::Parse(format!("`{s}` has a free parameter")));
        }
        Ok(t.eval(self, 0))
    }
}

impl fmt::Display for Syllable {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "x{}^{}", self.factor, self.exp)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
enum Exponent {
    Const(i64),
    Linear { coef: i64, offset: i64 },
}

impl Exponent {
    fn at(self, n: i64) -> i64 {
        match self {
            Exponent::Const(k) => k,
            Exponent::Linear { coef, offset } => coef * n + offset,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
enum Atom {
    Letter(u8, i8),
    Identity,
    Group(Vec<Term>),
}

#[derive(Clone, Debug, PartialEq, Eq)]
struct Term {
    atom: Atom,
    exp: Exponent,
}

/// A word with one integer parameter `n`, e.g. `"(ab)^n"`, `"b a^2n B"`, `"t^-n"`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct WordTemplate {
    source: String,
    terms: Vec<Term>,
}

struct Parser<'a> {
    alphabet: &'a Alphabet,
    chars: Vec<char>,
    pos: usize,
    source: &'a str,
}

impl Parser<'_> {
    fn err(&self, msg: &str) -> LabError {
        LabError::Parse(format!("{msg} at position {} in `{}`", self.pos, self.source))
    }

    fn skip_ws(&mut self) {
        while self.pos < self.chars.len() && self.chars[self.pos].is_whitespace() {
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Option<char> {
        self.skip_ws();
        self.chars.get(self.pos).copied()
    }

    fn terms(&mut self) -> Result<Vec<Term>> {
        let mut out = Vec::new();
        while let Some(c) = self.peek() {
            if c == ')' {
                break;
            }
            let atom = if c == '(' {
                self.pos += 1;
                let inner = self.terms()?;
                if self.peek() != Some(')') {
                    return Err(self.err("unclosed parenthesis"));
                }
                self.pos += 1;
                Atom::Group(inner)
            } else if c == 'e' || c == '1' {
                self.pos += 1;
                Atom::Identity
            } else if c.is_ascii_alphabetic() {
                self.pos += 1;
                let f = self
                    .alphabet
                    .factor_of(c.to_ascii_lowercase())
                    .ok_or_else(|| self.err(&format!("unknown generator `{c}`")))?;
                Atom::Letter(f, if c.is_ascii_lowercase() { 1 } else { -1 })
            } else {
                return Err(self.err(&format!("unexpected `{c}`")));
            };
            let exp = if self.peek() == Some('^') {
                self.pos += 1;
                self.exponent()?
            } else {
                Exponent::Const(1)
            };
            out.push(Term { atom, exp });
        }
        Ok(out)
    }

    fn integer(&mut self) -> Option<i64> {
        let start = self.pos;
        while self.pos < self.chars.len() && self.chars[self.pos].is_ascii_digit() {
            self.pos += 1;
        }
        if start == self.pos {
            None
        } else {
            self.chars[start..self.pos].iter().collect::<String>().parse().ok()
        }
    }

    fn exponent(&mut self) -> Result<Exponent> {
        self.skip_ws();
        let paren = self.peek() == Some('(');
        if paren {
            self.pos += 1;
            self.skip_ws();
        }
        let sign = if self.chars.get(self.pos) == Some(&'-') {
            self.pos += 1;
            -1
        } else {
            1
        };
        let k = self.integer();
        let exp = if self.chars.get(self.pos) == Some(&'n') {
            self.pos += 1;
            let coef = sign * k.unwrap_or(1);
            let mut offset = 0;
            if paren {
                self.skip_ws();
                if let Some(&c) = self.chars.get(self.pos) {
                    if c == '+' || c == '-' {
                        self.pos += 1;
                        self.skip_ws();
                        let v = self.integer().ok_or_else(|| self.err("expected offset"))?;
                        offset = if c == '+' { v } else { -v };
                    }
                }
            }
            Exponent::Linear { coef, offset }
        } else {
            Exponent::Const(sign * k.ok_or_else(|| self.err("expected exponent"))?)
        };
        if paren {
            if self.peek() != Some(')') {
                return Err(self.err("unclosed exponent"));
            }
            self.pos += 1;
        }
        Ok(exp)
    }
}

impl WordTemplate {
    pub fn parse(alphabet: &Alphabet, s: &str) -> Result<Self> {
        let mut p = Parser {
            alphabet,
            chars: s.chars().collect(),
            pos: 0,
            source: s,
        };
        let terms = p.terms()?;
        if p.peek().is_some() {
            return Err(p.err("unbalanced `)`"));
        }
        Ok(WordTemplate {
            source: s.to_string(),
            terms,
        })
    }

    pub fn source(&self) -> &str {
        &self.source
    }

    pub fn has_param(&self) -> bool {
        fn walk(ts: &[Term]) -> bool {
            ts.iter().any(|t| {
                matches!(t.exp, Exponent::Linear { .. })
                    || matches!(&t.atom, Atom::Group(inner) if walk(inner))
            })
        }
        walk(&self.terms)
    }

    pub fn eval(&self, alphabet: &Alphabet, n: i64) -> Word {
        fn walk(alphabet: &Alphabet, ts: &[Term], n: i64) -> Word {
            let mut acc = Word::identity();
            for t in ts {
                let base = match &t.atom {
                    Atom::Letter(f, s) => alphabet.syllable(*f, *s as i64),
                    Atom::Identity => Word::identity(),
                    Atom::Group(inner) => walk(alphabet, inner, n),
                };
                let w = match (&t.atom, t.exp.at(n)) {
                    (Atom::Letter(f, s), k) => alphabet.syllable(*f, *s as i64 * k),
                    (_, k) => alphabet.pow(&base, k),
                };
                acc = alphabet.mul(&acc, &w);
            }
            acc
        }
        walk(alphabet, &self.terms, n)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn f2() -> Alphabet {
        Alphabet::free(2).unwrap()
    }

    fn z3z4() -> Alphabet {
        Alphabet::new(vec![Factor::finite('s', 3), Factor::finite('t', 4)]).unwrap()
    }

    #[test]
    fn free_reduction() {
        let a = f2();
        let w = a.parse("abBA").unwrap();
        assert!(w.is_identity());
        assert_eq!(a.format(&a.parse("aab").unwrap()), "a^2b");
        assert_eq!(a.format(&a.parse("A^3").unwrap()), "A^3");
        assert_eq!(a.parse("a^-3").unwrap(), a.parse("AAA").unwrap());
    }

    #[test]
    fn finite_orders_wrap() {
        let a = z3z4();
        assert!(a.parse("sss").unwrap().is_identity());
        assert_eq!(a.format(&a.parse("ss").unwrap()), "S");
        assert_eq!(a.format(&a.parse("TT").unwrap()), "t^2");
        assert_eq!(a.cayley_len(&a.parse("t^3").unwrap()), 1);
        assert_eq!(a.generators().len(), 4);
    }

    #[test]
    fn involution_has_one_generator() {
        let a = Alphabet::new(vec![Factor::finite('s', 2), Factor::infinite('a')]).unwrap();
        assert_eq!(a.generators().len(), 3);
        assert_eq!(a.inverse(&a.parse("s").unwrap()), a.parse("s").unwrap());
    }

    #[test]
    fn coned_length_caps_syllables() {
        let a = Alphabet::new(vec![Factor::infinite('a'), Factor::finite('s', 3)]).unwrap();
        assert_eq!(a.coned_len(&a.parse("a^7sa").unwrap()), 4);
        assert_eq!(a.cayley_len(&a.parse("a^7sa").unwrap()), 9);
    }

    #[test]
    fn templates() {
        let a = f2();
        let t = WordTemplate::parse(&a, "(ab)^n").unwrap();
        assert!(t.has_param());
        assert_eq!(a.format(&t.eval(&a, 3)), "ababab");
        let t = WordTemplate::parse(&a, "b a^2n B").unwrap();
        assert_eq!(a.format(&t.eval(&a, 2)), "ba^4B");
        let t = WordTemplate::parse(&a, "a^(n+1)").unwrap();
        assert_eq!(a.format(&t.eval(&a, 0)), "a");
        let t = WordTemplate::parse(&a, "A^-n").unwrap();
        assert_eq!(a.format(&t.eval(&a, 2)), "a^2");
        assert!(WordTemplate::parse(&a, "(ab").is_err());
        assert!(WordTemplate::parse(&a, "z").is_err());
    }

    #[test]
    fn pow_matches_repeated_product() {
        let a = z3z4();
        let w = a.parse("st^2S").unwrap();
        let mut acc = Word::identity();
        for n in 0..7 {
            assert_eq!(a.pow(&w, n), acc);
            acc = a.mul(&acc, &w);
        }
        assert_eq!(a.pow(&w, -2), a.inverse(&a.pow(&w, 2)));
    }

    #[test]
    fn shortlex_prefers_short_then_letter_rank() {
        let a = f2();
        let w = |s| a.parse(s).unwrap();
        assert_eq!(a.shortlex_cmp(&w("b"), &w("aa")), Ordering::Less);
        assert_eq!(a.shortlex_cmp(&w("a"), &w("A")), Ordering::Less);
        assert_eq!(a.shortlex_cmp(&w("A"), &w("b")), Ordering::Less);
    }
}
