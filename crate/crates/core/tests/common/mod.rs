#![allow(dead_code)]

use std::collections::{HashMap, HashSet, VecDeque};

use lampext::growth::bfs_ball;
use lampext::word::{evaluate_symbols, GeneratingSet, Symbol};
use lampext::{BaseGroup, GElement, Group, SymmetricSet};
use rand::Rng;

/// All words of length at most `n` over `alphabet`, shortest first.
pub fn words_up_to(alphabet: &[Symbol], n: usize) -> Vec<Vec<Symbol>> {
    let mut out = vec![Vec::new()];
    let mut layer = vec![Vec::new()];
    for _ in 0..n {
        let mut next = Vec::new();
        for w in &layer {
            for &s in alphabet {
                let mut v: Vec<Symbol> = w.clone();
                v.push(s);
                next.push(v);
            }
        }
        out.extend(next.iter().cloned());
        layer = next;
    }
    out
}

pub fn random_word<R: Rng>(rng: &mut R, alphabet: &[Symbol], max_len: usize) -> Vec<Symbol> {
    let len = rng.gen_range(0..=max_len);
    (0..len).map(|_| alphabet[rng.gen_range(0..alphabet.len())]).collect()
}

pub fn random_element<R: Rng>(rng: &mut R, group: &Group, set: GeneratingSet, max_len: usize) -> GElement {
    let alphabet = set.symbols(group.base());
    evaluate_symbols(group, &random_word(rng, &alphabet, max_len))
}

pub fn z_group(set: SymmetricSet) -> Group {
    Group::over_integers(set).expect("valid descriptor")
}

/// Elements of `G` of `S′`-length at most `radius`.
pub fn ball_elements(group: &Group, radius: usize) -> Vec<GElement> {
    bfs_ball(group, GeneratingSet::Standard, radius).expect("radius within limit").vertices
}

/// The part of `⟨gens⟩` reachable from the identity through products by
/// generators and their inverses without leaving `ball`.
pub fn closure_in_ball(group: &Group, gens: &[GElement], ball: &HashSet<GElement>) -> HashSet<GElement> {
    let mut steps: Vec<GElement> = gens.to_vec();
    steps.extend(gens.iter().map(|g| group.inverse(g)));
    let mut seen = HashSet::from([group.identity()]);
    let mut queue = VecDeque::from([group.identity()]);
    while let Some(x) = queue.pop_front() {
        for g in &steps {
            let y = group.multiply(&x, g);
            if ball.contains(&y) && seen.insert(y.clone()) {
                queue.push_back(y);
            }
        }
    }
    seen
}

pub fn symmetric_pool() -> Vec<SymmetricSet> {
    vec![
        SymmetricSet::empty(),
        SymmetricSet::finite_integers([1]),
        SymmetricSet::finite_integers([2]),
        SymmetricSet::finite_integers([1, 3]),
        SymmetricSet::finite_integers([1, 2, 4]),
        SymmetricSet::periodic(2, [1]),
        SymmetricSet::periodic(3, [1, 2]),
        SymmetricSet::periodic(4, [2]),
        SymmetricSet::eventually_periodic(2, [-1, 1], 3, [0]),
    ]
}

/// Count of distinct labels, used to size random samples.
pub fn histogram<K: std::hash::Hash + Eq>(items: impl IntoIterator<Item = K>) -> HashMap<K, usize> {
    let mut h = HashMap::new();
    for k in items {
        *h.entry(k).or_insert(0) += 1;
    }
    h
}

pub fn free_group(rank: usize, set: SymmetricSet) -> Group {
    Group::new(BaseGroup::Free(rank), set).expect("valid descriptor")
}
