#![allow(dead_code)]

use fricke::family::KappaParams;
use fricke::group::{Generator, GroupWord};
use fricke::scalar::rat;
use rand::Rng;
use rand_chacha::rand_core::SeedableRng;
use rand_chacha::ChaCha8Rng;

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

pub fn small_rational(rng: &mut impl Rng) -> fricke::Rational {
    rat(rng.gen_range(-6..=6), rng.gen_range(1..=4))
}

pub fn small_params(rng: &mut impl Rng) -> KappaParams {
    KappaParams::new(small_rational(rng), small_rational(rng), small_rational(rng))
}

/// A reduced tau word: no letter repeats its neighbour.
pub fn tau_word(rng: &mut impl Rng, len: usize) -> GroupWord {
    let mut letters: Vec<Generator> = Vec::with_capacity(len);
    while letters.len() < len {
        let g = Generator::TAUS[rng.gen_range(0..3)];
        if letters.last() != Some(&g) {
            letters.push(g);
        }
    }
    GroupWord::new(letters)
}

pub fn gamma_word(rng: &mut impl Rng, len: usize) -> GroupWord {
    let letters = (0..len).map(|_| Generator::GAMMA_ALPHABET[rng.gen_range(0..Generator::GAMMA_ALPHABET.len())]).collect();
    GroupWord::new(letters)
}

/// Every reduced tau word of the given length.
pub fn all_tau_words(len: usize) -> Vec<GroupWord> {
    let mut words = vec![Vec::new()];
    for _ in 0..len {
        let mut next = Vec::with_capacity(words.len() * 3);
        for w in &words {
            for g in Generator::TAUS {
                if w.last() != Some(&g) {
                    let mut v: Vec<Generator> = w.clone();
                    v.push(g);
                    next.push(v);
                }
            }
        }
        words = next;
    }
    words.into_iter().map(GroupWord::new).collect()
}

/// `x² + y² + z² − xyz − Px − Qy − Rz − 2`, written out directly.
pub fn kappa_at(p: &KappaParams, v: &[fricke::Rational; 3]) -> fricke::Rational {
    let [x, y, z] = v;
    x * x + y * y + z * z - x * y * z - &p.p * x - &p.q * y - &p.r * z - rat(2, 1)
}
