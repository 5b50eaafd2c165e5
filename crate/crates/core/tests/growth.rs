mod common;

use std::collections::BTreeSet;

use common::{symmetric_pool, z_group};
use lampext::growth::{
    beta_standard, bfs_ball, marked_ball_isomorphic, reconstruct_i_from_beta, series_c2wrz, series_gi_s,
};
use lampext::{GeneratingSet, SymmetricSet};

fn as_i128(v: &[u64]) -> Vec<i128> {
    v.iter().map(|&x| x as i128).collect()
}

#[test]
fn ball_examples() {
    let g = z_group(SymmetricSet::finite_integers([1]));
    assert_eq!(bfs_ball(&g, GeneratingSet::Standard, 0).unwrap().beta(), vec![1]);
    assert_eq!(bfs_ball(&g, GeneratingSet::Wreath, 1).unwrap().beta(), vec![1, 4]);
    assert_eq!(bfs_ball(&g, GeneratingSet::Standard, 1).unwrap().beta(), vec![1, 5]);
}

#[test]
fn ball_invariants() {
    let g = z_group(SymmetricSet::periodic(3, [1, 2]));
    let ball = bfs_ball(&g, GeneratingSet::Standard, 5).unwrap();
    let beta = ball.beta();
    assert_eq!(beta[0], 1);
    assert!(beta.windows(2).all(|w| w[0] <= w[1]));
    // Every non-root vertex has a neighbour one step closer.
    let mut has_parent = vec![false; ball.len()];
    has_parent[0] = true;
    for (v, _, t) in ball.edges() {
        if ball.distance[t] == ball.distance[v] + 1 {
            has_parent[t] = true;
        }
    }
    assert!(has_parent.iter().all(|&b| b));
}

#[test]
fn lamplighter_series_counts_spheres() {
    let g = z_group(SymmetricSet::empty());
    let ball = bfs_ball(&g, GeneratingSet::Wreath, 10).unwrap();
    assert_eq!(series_c2wrz().coefficients(11).unwrap(), as_i128(&ball.spheres()));
    assert_eq!(series_c2wrz().cumulative().unwrap().coefficients(11).unwrap(), as_i128(&ball.beta()));
}

#[test]
fn doubled_series_relation() {
    let f = series_c2wrz().coefficients(9).unwrap();
    let s = series_gi_s().coefficients(9).unwrap();
    assert_eq!(s[0], 1);
    assert_eq!(s[2], 2 * f[2] + 1);
    for n in [1, 3, 4, 5, 6, 7, 8] {
        assert_eq!(s[n], 2 * f[n]);
    }
}

#[test]
fn doubled_balls_do_not_depend_on_the_set() {
    let expected = series_gi_s().coefficients(9).unwrap();
    for set in symmetric_pool() {
        let g = z_group(set);
        let ball = bfs_ball(&g, GeneratingSet::Doubled, 8).unwrap();
        assert_eq!(as_i128(&ball.spheres()), expected, "{g}");
    }
}

#[test]
fn standard_balls_detect_new_commutators() {
    for r in 0..3usize {
        let radius = 2 * r + 4;
        let with = beta_standard(&SymmetricSet::finite_integers([r as i64 + 1]), radius).unwrap()[radius];
        let without = beta_standard(&SymmetricSet::empty(), radius).unwrap()[radius];
        assert_eq!(with as i64 - without as i64, r as i64 + 2, "r = {r}");
    }
}

#[test]
fn marked_ball_examples() {
    let one = SymmetricSet::finite_integers([1]);
    assert!(marked_ball_isomorphic(&one, &one, 1).unwrap());
    assert!(marked_ball_isomorphic(&one, &SymmetricSet::finite_integers([1, 3]), 1).unwrap());
    assert!(!marked_ball_isomorphic(&one, &SymmetricSet::empty(), 1).unwrap());
}

fn beta_of(set: SymmetricSet) -> impl Fn(usize) -> u64 {
    move |n| beta_standard(&set, n).unwrap()[n]
}

#[test]
fn reconstruction_examples() {
    let (empty, _) = reconstruct_i_from_beta(&beta_of(SymmetricSet::empty()), 2).unwrap();
    assert!(empty.is_empty());
    let (one, steps) = reconstruct_i_from_beta(&beta_of(SymmetricSet::finite_integers([1])), 2).unwrap();
    assert_eq!(one, BTreeSet::from([-1, 1]));
    assert_eq!(steps.len(), 2);
    let (odd, _) = reconstruct_i_from_beta(&beta_of(SymmetricSet::periodic(2, [1])), 2).unwrap();
    assert_eq!(odd, BTreeSet::from([-1, 1]));
}

#[test]
fn reconstruction_is_idempotent() {
    for set in [SymmetricSet::finite_integers([2]), SymmetricSet::periodic(3, [1, 2])] {
        let (first, _) = reconstruct_i_from_beta(&beta_of(set), 2).unwrap();
        let again = SymmetricSet::finite_integers(first.iter().copied().filter(|&n| n > 0));
        let (second, _) = reconstruct_i_from_beta(&beta_of(again), 2).unwrap();
        assert_eq!(first, second);
    }
}

#[test]
fn reconstruction_rejects_inconsistent_oracles() {
    assert!(reconstruct_i_from_beta(&|_| 0, 1).is_err());
}
