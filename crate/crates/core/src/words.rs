//! Words over the positive integers, the submonoid generated by `a = 11`
//! and `b = 22`, the substitutions `U` and `V`, and the digit stream of the
//! extremal number attached to a Markoff triple.

use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::exactnum::Mat2;
use crate::markoff::{maximal_zigzag, MarkoffTriple, Side};

/// A finite word of positive integers.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Word(pub Vec<u64>);

impl Word {
    pub fn new(letters: Vec<u64>) -> Self {
        Word(letters)
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn letters(&self) -> &[u64] {
        &self.0
    }

    pub fn concat(&self, o: &Word) -> Word {
        let mut v = self.0.clone();
        v.extend_from_slice(&o.0);
        Word(v)
    }

    /// `w*`.
    pub fn reversed(&self) -> Word {
        Word(self.0.iter().rev().copied().collect())
    }

    pub fn is_palindrome(&self) -> bool {
        self.0.iter().eq(self.0.iter().rev())
    }

    pub fn is_prefix_of(&self, o: &Word) -> bool {
        o.0.starts_with(&self.0)
    }

    pub fn prefix(&self, n: usize) -> Word {
        Word(self.0[..n.min(self.len())].to_vec())
    }

    pub fn repeat(&self, n: usize) -> Word {
        Word(self.0.repeat(n))
    }

    /// Digits joined by commas, regardless of size.
    pub fn to_comma_string(&self) -> String {
        let v: Vec<String> = self.0.iter().map(u64::to_string).collect();
        v.join(",")
    }
}

impl fmt::Display for Word {
    /// Digit string when every letter is below ten, comma-separated otherwise.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.iter().all(|&d| d <= 9) {
            for d in &self.0 {
                write!(f, "{d}")?;
            }
            Ok(())
        } else {
            f.write_str(&self.to_comma_string())
        }
    }
}

impl FromStr for Word {
    type Err = Error;

    fn from_str(s: &str) -> Result<Word> {
        let s = s.trim();
        let bad = || Error::InvalidInput(format!("not a word: {s:?}"));
        let letters: Result<Vec<u64>> = if s.contains(',') {
            s.split(',').map(|t| t.trim().parse::<u64>().map_err(|_| bad())).collect()
        } else {
            s.chars().map(|c| c.to_digit(10).map(u64::from).ok_or_else(bad)).collect()
        };
        let letters = letters?;
        if letters.contains(&0) {
            return Err(bad());
        }
        Ok(Word(letters))
    }
}

/// `φ(w) = (a₁ 1; 1 0) ⋯ (a_k 1; 1 0)`.
pub fn phi(w: &Word) -> Mat2 {
    w.0.iter().fold(Mat2::identity(), |acc, &d| &acc * &Mat2::digit(d))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Letter {
    A,
    B,
}

/// A word over `{a, b}`, with `a = 11` and `b = 22`.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct W2Word(pub Vec<Letter>);

impl W2Word {
    pub fn ab() -> Self {
        W2Word(vec![Letter::A, Letter::B])
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn reversed(&self) -> Self {
        W2Word(self.0.iter().rev().copied().collect())
    }

    pub fn is_palindrome(&self) -> bool {
        self.0.iter().eq(self.0.iter().rev())
    }

    /// The digit word: `a ↦ 1,1` and `b ↦ 2,2`.
    pub fn expand(&self) -> Word {
        Word(
            self.0
                .iter()
                .flat_map(|l| match l {
                    Letter::A => [1, 1],
                    Letter::B => [2, 2],
                })
                .collect(),
        )
    }
}

impl fmt::Display for W2Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for l in &self.0 {
            f.write_str(match l {
                Letter::A => "a",
                Letter::B => "b",
            })?;
        }
        Ok(())
    }
}

impl FromStr for W2Word {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        s.trim()
            .chars()
            .map(|c| match c {
                'a' => Ok(Letter::A),
                'b' => Ok(Letter::B),
                _ => Err(Error::InvalidInput(format!("not a word over {{a,b}}: {s:?}"))),
            })
            .collect::<Result<_>>()
            .map(W2Word)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Endo {
    /// `a ↦ ab`, `b ↦ b`.
    U,
    /// `a ↦ a`, `b ↦ ab`.
    V,
}

/// A product of `U` and `V` acting on the right: `w^(στ) = (w^σ)^τ`.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct EndoWord(pub Vec<Endo>);

impl EndoWord {
    pub fn identity() -> Self {
        EndoWord(vec![])
    }

    pub fn is_identity(&self) -> bool {
        self.0.is_empty()
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// `e` followed by `o` in the right-action order.
    pub fn then(&self, o: &EndoWord) -> EndoWord {
        let mut v = self.0.clone();
        v.extend_from_slice(&o.0);
        EndoWord(v)
    }

    pub fn prepend(&self, e: Endo) -> EndoWord {
        let mut v = Vec::with_capacity(self.0.len() + 1);
        v.push(e);
        v.extend_from_slice(&self.0);
        EndoWord(v)
    }
}

impl fmt::Display for EndoWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            return f.write_str("I");
        }
        for e in &self.0 {
            f.write_str(match e {
                Endo::U => "U",
                Endo::V => "V",
            })?;
        }
        Ok(())
    }
}

impl FromStr for EndoWord {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        if s == "I" || s.is_empty() {
            return Ok(EndoWord::identity());
        }
        s.chars()
            .map(|c| match c {
                'U' => Ok(Endo::U),
                'V' => Ok(Endo::V),
                _ => Err(Error::InvalidInput(format!("not a word over {{U,V}}: {s:?}"))),
            })
            .collect::<Result<_>>()
            .map(EndoWord)
    }
}

fn apply_one(w: &W2Word, e: Endo) -> W2Word {
    let mut out = Vec::with_capacity(w.len() * 2);
    for &l in &w.0 {
        match (e, l) {
            (Endo::U, Letter::A) => out.extend([Letter::A, Letter::B]),
            (Endo::V, Letter::B) => out.extend([Letter::A, Letter::B]),
            _ => out.push(l),
        }
    }
    W2Word(out)
}

/// `w^e`, applying the letters of `e` from left to right.
pub fn apply_morphism(w: &W2Word, e: &EndoWord) -> W2Word {
    e.0.iter().fold(w.clone(), |acc, &x| apply_one(&acc, x))
}

/// `ψ_m`: the identity at `(5,1,2)`, with `V` prepended on each left step
/// and `U` on each right step below it.
pub fn psi_for_triple(t: &MarkoffTriple) -> Result<EndoWord> {
    if t.is_degenerate() || t.is_root() {
        return Err(Error::NotInPsiTree(t.to_string()));
    }
    Ok(t.path[1..].iter().fold(EndoWord::identity(), |e, s| {
        e.prepend(match s {
            Side::Left => Endo::V,
            Side::Right => Endo::U,
        })
    }))
}

/// `Π_m` as a digit word: `11` at `(1,1,1)`, `22` at `(2,1,1)`, and
/// `(ab)^ψ_m` elsewhere.
pub fn pi_word(t: &MarkoffTriple) -> Word {
    if t.is_degenerate() {
        return Word(vec![1, 1]);
    }
    if t.is_root() {
        return Word(vec![2, 2]);
    }
    let psi = psi_for_triple(t).expect("nodes below the root");
    apply_morphism(&W2Word::ab(), &psi).expand()
}

/// The palindrome `p` with `(ab)^e = a·p·b`.
pub fn palindrome_factor(e: &EndoWord) -> Result<W2Word> {
    let w = apply_morphism(&W2Word::ab(), e);
    let n = w.len();
    if n < 2 || w.0[0] != Letter::A || w.0[n - 1] != Letter::B {
        return Err(Error::FactorizationFailure(w.to_string()));
    }
    let p = W2Word(w.0[1..n - 1].to_vec());
    if !p.is_palindrome() {
        return Err(Error::FactorizationFailure(w.to_string()));
    }
    Ok(p)
}

/// The endomorphism `ψ` generating the digit stream of `ξ_t`, taken at the
/// first zigzag node after a right step, or the second node otherwise.
pub fn stream_psi(t: &MarkoffTriple) -> Result<EndoWord> {
    let zz = maximal_zigzag(t, 2)?;
    let second = &zz[1];
    let start = if second.side() == Some(Side::Right) { &zz[0] } else { second };
    psi_for_triple(start)
}

/// Iterator over the nested prefixes `(ab)^((VU)^i ψ)`, `i = 0, 1, …`.
#[derive(Clone, Debug)]
pub struct StreamPrefixes {
    base: W2Word,
    psi: EndoWord,
}

impl StreamPrefixes {
    pub fn new(t: &MarkoffTriple) -> Result<Self> {
        Ok(StreamPrefixes { base: W2Word::ab(), psi: stream_psi(t)? })
    }

    pub fn psi(&self) -> &EndoWord {
        &self.psi
    }
}

impl Iterator for StreamPrefixes {
    type Item = W2Word;

    fn next(&mut self) -> Option<W2Word> {
        let out = apply_morphism(&self.base, &self.psi);
        self.base = apply_one(&apply_one(&self.base, Endo::V), Endo::U);
        Some(out)
    }
}

/// First `n` partial quotients `a₁a₂⋯` of `ξ_t`.
pub fn xi_word_stream(t: &MarkoffTriple, n: usize) -> Result<Word> {
    let mut prev: Option<Word> = None;
    for w in StreamPrefixes::new(t)? {
        let w = w.expand();
        if let Some(p) = &prev {
            if !p.is_prefix_of(&w) {
                return Err(Error::Degenerate(format!("digit-stream prefixes of {t} are not nested")));
            }
        }
        if w.len() >= n {
            return Ok(w.prefix(n));
        }
        prev = Some(w);
    }
    unreachable!("the prefix iterator is infinite")
}

/// Every `Π` with `Π³` a prefix of `p`.
pub fn cube_prefixes(p: &Word) -> Vec<Word> {
    (1..=p.len() / 3)
        .filter(|&l| {
            let head = &p.0[..l];
            p.0[l..2 * l] == *head && p.0[2 * l..3 * l] == *head
        })
        .map(|l| p.prefix(l))
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactnum::int;
    use crate::markoff::{cohn_matrix, locate};

    fn tr(m: i64, m1: i64, m2: i64) -> MarkoffTriple {
        locate(&int(m), &int(m1), &int(m2)).unwrap()
    }

    fn w(s: &str) -> Word {
        s.parse().unwrap()
    }

    fn e(s: &str) -> EndoWord {
        s.parse().unwrap()
    }

    #[test]
    fn phi_values() {
        assert_eq!(phi(&w("1")), Mat2::new(1, 1, 1, 0));
        assert_eq!(phi(&w("11")), Mat2::new(2, 1, 1, 1));
        assert_eq!(phi(&w("1122")), Mat2::new(12, 5, 7, 3));
        assert_eq!(phi(&Word::default()), Mat2::identity());
    }

    #[test]
    fn morphisms() {
        let a: W2Word = "a".parse().unwrap();
        assert_eq!(apply_morphism(&a, &e("U")).to_string(), "ab");
        assert_eq!(apply_morphism(&W2Word::ab(), &e("VU")).to_string(), "ababb");
        assert_eq!(apply_morphism(&W2Word::ab(), &e("V")).to_string(), "aab");
    }

    #[test]
    fn psi_tree() {
        assert!(psi_for_triple(&MarkoffTriple::base()).unwrap().is_identity());
        assert_eq!(psi_for_triple(&tr(194, 13, 5)).unwrap(), e("UV"));
        assert_eq!(psi_for_triple(&tr(13, 1, 5)).unwrap(), e("V"));
        assert!(matches!(psi_for_triple(&MarkoffTriple::root()), Err(Error::NotInPsiTree(_))));
        assert!(psi_for_triple(&MarkoffTriple::degenerate()).is_err());
    }

    #[test]
    fn pi_words() {
        assert_eq!(pi_word(&MarkoffTriple::degenerate()), w("11"));
        assert_eq!(pi_word(&MarkoffTriple::root()), w("22"));
        assert_eq!(pi_word(&tr(13, 1, 5)), w("111122"));
        for t in [MarkoffTriple::root(), MarkoffTriple::base(), tr(13, 1, 5), tr(194, 13, 5)] {
            let x = cohn_matrix(&t).unwrap().to_mat2();
            assert_eq!(phi(&pi_word(&t)), &x * &Mat2::markoff_m());
        }
    }

    #[test]
    fn palindromes() {
        assert!(palindrome_factor(&EndoWord::identity()).unwrap().is_empty());
        assert_eq!(palindrome_factor(&e("V")).unwrap().to_string(), "a");
        assert_eq!(palindrome_factor(&e("VU")).unwrap().to_string(), "bab");
    }

    #[test]
    fn streams() {
        assert_eq!(xi_word_stream(&MarkoffTriple::root(), 8).unwrap(), w("11221122"));
        assert_eq!(xi_word_stream(&MarkoffTriple::base(), 8).unwrap(), w("11112211"));
        assert_eq!(xi_word_stream(&tr(29, 5, 2), 6).unwrap(), w("112222"));
        assert_eq!(stream_psi(&MarkoffTriple::base()).unwrap(), e("V"));
        assert!(xi_word_stream(&MarkoffTriple::degenerate(), 4).is_err());
    }

    #[test]
    fn cubes() {
        assert_eq!(cube_prefixes(&w("111122")), vec![w("1")]);
        assert!(cube_prefixes(&w("112211")).is_empty());
        assert!(cube_prefixes(&Word::default()).is_empty());
    }

    #[test]
    fn word_text() {
        assert_eq!(w("1,12,3").to_string(), "1,12,3");
        assert_eq!(w("1,1,2").to_string(), "112");
        assert!("10".parse::<Word>().is_err());
    }
}
