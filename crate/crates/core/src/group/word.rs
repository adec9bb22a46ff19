//! Words over the generator alphabets.
//!
//! Grammar: whitespace-separated letters from `a b g sx sy sz t1 t2 t3`, each
//! with an optional `^-1`, optionally followed by one L-element literal
//! `perm(<xyz>)flip(<axes>)`. The word `[w1, …, wk]` denotes `w1 ∘ … ∘ wk`,
//! so the tail is applied first.

use std::fmt;

use super::generator::{generator, Generator};
use super::signed_perm::SignedPerm;
use crate::error::{Error, Result};
use crate::family::KappaParams;
use crate::{Map3, Poly, PolyMap};

#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub struct GroupWord {
    pub letters: Vec<Generator>,
    pub tail: Option<SignedPerm>,
}

impl GroupWord {
    pub fn new(letters: Vec<Generator>) -> Self {
        GroupWord { letters, tail: None }
    }

    pub fn with_tail(letters: Vec<Generator>, tail: SignedPerm) -> Self {
        GroupWord { letters, tail: (!tail.is_identity()).then_some(tail) }
    }

    pub fn empty() -> Self {
        GroupWord::default()
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty() && self.tail.is_none()
    }

    pub fn tail_or_identity(&self) -> SignedPerm {
        self.tail.unwrap_or_else(SignedPerm::identity)
    }

    pub fn is_tau_word(&self) -> bool {
        self.letters.iter().all(|g| g.is_tau())
    }

    pub fn is_gamma_word(&self) -> bool {
        self.letters.iter().all(|g| !g.is_tau())
    }

    pub fn parse(s: &str) -> Result<GroupWord> {
        let (body, tail) = match s.find("perm(") {
            Some(i) => (&s[..i], Some(SignedPerm::parse(&s[i..]).map_err(|e| shift(e, i))?)),
            None => (s, None),
        };
        let mut letters = Vec::new();
        let mut offset = 0;
        for token in body.split_whitespace() {
            let start = offset + body[offset..].find(token).unwrap_or(0);
            offset = start + token.len();
            let (name, inverse) = match token.strip_suffix("^-1") {
                Some(n) => (n, true),
                None => (token, false),
            };
            let g = Generator::parse(name).ok_or_else(|| {
                if name.contains('^') || name.is_empty() {
                    Error::Parse { position: start, message: format!("malformed letter `{token}`") }
                } else {
                    Error::UnknownLetter(token.to_string())
                }
            })?;
            letters.push(g);
            if inverse && !g.is_involution() {
                // beta has order three
                letters.push(g);
            }
        }
        Ok(GroupWord { letters, tail: tail.filter(|t| !t.is_identity()) })
    }

    /// Cancels adjacent pairs of equal involutions and runs of three betas.
    pub fn reduced(&self) -> GroupWord {
        let mut stack: Vec<Generator> = Vec::with_capacity(self.letters.len());
        for &g in &self.letters {
            let n = stack.len();
            if g.is_involution() && stack.last() == Some(&g) {
                stack.pop();
            } else if g == Generator::Beta && n >= 2 && stack[n - 1] == g && stack[n - 2] == g {
                stack.truncate(n - 2);
            } else {
                stack.push(g);
            }
        }
        GroupWord { letters: stack, tail: self.tail }
    }

    pub fn is_reduced(&self) -> bool {
        self.reduced() == *self
    }

    pub fn concat(&self, other: &GroupWord) -> Result<GroupWord> {
        if self.tail.is_some() && !other.letters.is_empty() {
            return Err(Error::Alphabet("an L-element tail must come last".into()));
        }
        let mut letters = self.letters.clone();
        letters.extend(&other.letters);
        let tail = match (self.tail, other.tail) {
            (Some(a), Some(b)) => Some(a.compose(&b)),
            (a, b) => a.or(b),
        };
        Ok(GroupWord { letters, tail: tail.filter(|t| !t.is_identity()) })
    }
}

fn shift(e: Error, by: usize) -> Error {
    match e {
        Error::Parse { position, message } => Error::Parse { position: position + by, message },
        e => e,
    }
}

impl fmt::Display for GroupWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut parts: Vec<String> = self.letters.iter().map(|g| g.letter().to_string()).collect();
        if let Some(t) = &self.tail {
            parts.push(t.to_string());
        }
        f.write_str(&parts.join(" "))
    }
}

/// Composition of the letters (and tail) in word order.
pub fn word_to_map(w: &GroupWord, params: &KappaParams) -> Result<Map3> {
    // build from the right: each new letter is applied on the outside, which
    // only substitutes into a generator of degree at most two
    let mut f = match &w.tail {
        Some(t) => t.to_map(),
        None => PolyMap::identity(),
    };
    for &g in w.letters.iter().rev() {
        f = apply_letter(g, &f, params)?;
    }
    Ok(f)
}

/// `g ∘ f`. A tau letter rewrites a single component, `f_i ↦ f_j f_k − f_i + c_i`.
pub fn apply_letter(g: Generator, f: &Map3, params: &KappaParams) -> Result<Map3> {
    let Some(i) = g.moved_coordinate() else {
        return generator(g, params)?.compose(f);
    };
    let mut comps = f.components().clone();
    comps[i] = tau_component(i, f, params)?;
    PolyMap::new(comps)
}

/// Component `i` of `τ ∘ f` for the tau letter moving coordinate `i`.
pub(crate) fn tau_component(i: usize, f: &Map3, params: &KappaParams) -> Result<Poly> {
    let c = f.components();
    let (j, k) = ((i + 1) % 3, (i + 2) % 3);
    let shift = c[i].constant_like(params.as_array()[i].clone());
    c[j].try_mul(&c[k])?.try_sub(&c[i])?.try_add(&shift)
}
