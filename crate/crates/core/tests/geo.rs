mod common;

use std::collections::BTreeSet;

use common::words_up_to;
use lampext::conjugacy::wreath_length_fr;
use lampext::geo::{
    build_conjgeo_grammar, build_conjgeo_grammar_as_printed, conjgeo_oracle, enumerate_language,
    enumerate_with_counts, lift_grammar, preimages, recognize, DEFAULT_ENUMERATION_LIMIT,
};
use lampext::word::{evaluate_wreath, parse_symbols};
use lampext::{BaseGroup, GeneratingSet, Symbol, Wreath};

fn w(s: &str) -> Vec<Symbol> {
    parse_symbols(s, &BaseGroup::Free(2)).unwrap()
}

#[test]
fn empty_word_has_one_derivation() {
    let gr = build_conjgeo_grammar(2);
    let r = recognize(&gr, &[]).unwrap();
    assert!(r.accepted);
    assert_eq!(r.derivations, 1);
}

#[test]
fn single_lamp_is_a_conjugacy_geodesic() {
    // The oracle accepts "a"; the grammar as originally stated does not.
    assert!(conjgeo_oracle(1, 2).unwrap().contains(&w("a")));
    assert!(recognize(&build_conjgeo_grammar(2), &w("a")).unwrap().accepted);
    assert!(!recognize(&build_conjgeo_grammar_as_printed(2), &w("a")).unwrap().accepted);
}

#[test]
fn recognizer_examples() {
    let gr = build_conjgeo_grammar(2);
    let oracle = conjgeo_oracle(5, 2).unwrap();
    assert!(!recognize(&gr, &w("s a S")).unwrap().accepted);
    for text in ["a s a S", "s", "s t", "a s a S t"] {
        let word = w(text);
        assert_eq!(recognize(&gr, &word).unwrap().accepted, oracle.contains(&word), "{text}");
    }
}

#[test]
fn short_lengths() {
    let gr = build_conjgeo_grammar(2);
    assert_eq!(enumerate_language(&gr, 0).unwrap(), BTreeSet::from([vec![]]));
    let one = enumerate_language(&gr, 1).unwrap();
    for l in lampext::base::Letter::all(2) {
        assert!(one.contains(&vec![Symbol::step(l)]));
    }
}

#[test]
fn language_matches_oracle_up_to_five() {
    let gr = build_conjgeo_grammar(2);
    let oracle = conjgeo_oracle(5, 2).unwrap();
    assert_eq!(enumerate_language(&gr, 5).unwrap(), oracle);
}

#[test]
fn rank_one_language_matches_oracle() {
    let gr = build_conjgeo_grammar(1);
    assert_eq!(enumerate_language(&gr, 7).unwrap(), conjgeo_oracle(7, 1).unwrap());
}

#[test]
fn derivations_are_unique() {
    let gr = build_conjgeo_grammar(2);
    let counts = enumerate_with_counts(&gr, 5, DEFAULT_ENUMERATION_LIMIT).unwrap();
    assert!(counts.values().all(|&c| c == 1));
    for word in counts.keys().take(200) {
        assert_eq!(recognize(&gr, word).unwrap().derivations, 1);
    }
}

#[test]
fn accepted_words_are_geodesic() {
    let wr = Wreath::new(BaseGroup::Free(2));
    for word in enumerate_language(&build_conjgeo_grammar(2), 6).unwrap() {
        assert_eq!(wreath_length_fr(&evaluate_wreath(&wr, &word)).unwrap(), word.len());
    }
}

#[test]
fn enumeration_limit_is_enforced() {
    let gr = build_conjgeo_grammar(2);
    assert!(enumerate_with_counts(&gr, DEFAULT_ENUMERATION_LIMIT + 1, DEFAULT_ENUMERATION_LIMIT).is_err());
    assert!(conjgeo_oracle(8, 2).is_err());
}

#[test]
fn lift_is_preimage_of_oracle_plus_kernel() {
    let lifted = lift_grammar(&build_conjgeo_grammar(2));
    let mut expected: BTreeSet<Vec<Symbol>> = conjgeo_oracle(5, 2).unwrap().iter().flat_map(|v| preimages(v)).collect();
    expected.insert(vec![Symbol::Center]);
    let mut alphabet = GeneratingSet::Doubled.symbols(&BaseGroup::Free(2));
    alphabet.push(Symbol::Center);
    let mut accepted = BTreeSet::new();
    for word in words_up_to(&alphabet, 5) {
        if recognize(&lifted, &word).unwrap().accepted {
            accepted.insert(word);
        }
    }
    assert_eq!(accepted, expected);
}

#[test]
fn unlifted_grammar_rejects_twisted_symbols() {
    let gr = build_conjgeo_grammar(2);
    assert!(recognize(&gr, &[Symbol::Lamp { twisted: true }]).is_err());
    let lifted = lift_grammar(&gr);
    assert!(recognize(&lifted, &[Symbol::Lamp { twisted: true }]).unwrap().accepted);
    assert!(recognize(&lifted, &[Symbol::Center]).unwrap().accepted);
}

#[test]
fn rendering_mentions_every_variable() {
    let gr = build_conjgeo_grammar(2);
    let text = gr.render();
    for name in ["S", "E_s", "E_t^-1"] {
        assert!(text.contains(name), "{name} missing");
    }
}
