mod common;

use common::all_tau_words;
use fricke::family::KappaParams;
use fricke::group::{word_to_map, GroupWord};
use fricke::homology::{homology_action, sign_character};
use fricke::{IntMatrix, Integer};

/// Tau words act on H₂ as ±I, with the sign given by the character.
#[test]
fn congruence_words_act_by_scalars() {
    let zero = KappaParams::zero();
    for len in 0..=6 {
        for w in all_tau_words(len) {
            let a = homology_action(&word_to_map(&w, &zero).unwrap()).unwrap();
            let s = sign_character(&w, &zero).unwrap();
            assert_eq!(a, IntMatrix::identity(5).scale(&Integer::from(s)), "{w}");
        }
    }
}

#[test]
fn permutation_part_reaches_all_of_s4() {
    use std::collections::HashSet;
    let zero = KappaParams::zero();
    let mut seen = HashSet::new();
    let letters = ["a", "b", "sx", "sy", "sz"];
    // breadth-first over short words avoiding γ, so the sign stays +1
    let mut frontier = vec![String::new()];
    for _ in 0..5 {
        let mut next = Vec::new();
        for w in &frontier {
            for l in letters {
                let v = format!("{w} {l}");
                let a = homology_action(&word_to_map(&GroupWord::parse(&v).unwrap(), &zero).unwrap()).unwrap();
                assert_eq!(a[(4, 4)], Integer::from(1));
                if seen.insert(a.to_rows()) {
                    next.push(v);
                }
            }
        }
        frontier = next;
    }
    assert_eq!(seen.len(), 24);
}
