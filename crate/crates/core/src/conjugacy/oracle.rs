//! Brute-force references used to validate the decision procedures.

use std::collections::{BTreeSet, HashMap};

use crate::base::{BaseElement, FreeWord, Letter};
use crate::conjugacy::length_of_words;
use crate::error::{Error, Result};
use crate::ext::{GElement, Group, WreathElement};
use crate::growth::bfs_ball;
use crate::word::GeneratingSet;

/// Exhaustive conjugator search over a ball of the Cayley graph. A miss
/// means "not found within the radius", not "not conjugate".
pub struct ConjugatorSearch {
    group: Group,
    ball: Vec<GElement>,
}

impl ConjugatorSearch {
    pub fn new(group: &Group, set: GeneratingSet, radius: usize) -> Result<ConjugatorSearch> {
        let ball = bfs_ball(group, set, radius)?;
        Ok(ConjugatorSearch {
            group: group.clone(),
            ball: ball.vertices,
        })
    }

    pub fn ball(&self) -> &[GElement] {
        &self.ball
    }

    /// All conjugates `c·g·c⁻¹` with `c` in the ball, each mapped to the first
    /// conjugator in BFS order producing it.
    pub fn conjugates(&self, g: &GElement) -> HashMap<GElement, usize> {
        let mut out = HashMap::new();
        for (i, c) in self.ball.iter().enumerate() {
            out.entry(self.group.conjugate(c, g)).or_insert(i);
        }
        out
    }

    pub fn find(&self, g: &GElement, h: &GElement) -> Option<GElement> {
        self.ball
            .iter()
            .find(|c| self.group.conjugate(c, g) == *h)
            .cloned()
    }
}

fn free_ball(rank: usize, radius: usize) -> Vec<FreeWord> {
    let mut out = vec![FreeWord::identity()];
    let mut frontier = vec![FreeWord::identity()];
    for _ in 0..radius {
        let mut next = Vec::new();
        for w in &frontier {
            for l in Letter::all(rank) {
                if w.last() == Some(l.inverse()) {
                    continue;
                }
                let mut v = w.clone();
                v.push(l);
                next.push(v);
            }
        }
        out.extend(next.iter().cloned());
        frontier = next;
    }
    out
}

/// Minimal length of an element in the conjugacy class of `g ∈ C₂ ≀ F_r`,
/// by enumerating translation conjugators and lamp transfers along
/// `⟨h′⟩`-orbits.
pub struct ClassMinOracle {
    rank: usize,
    balls: HashMap<usize, Vec<FreeWord>>,
    memo: HashMap<WreathElement, usize>,
}

impl ClassMinOracle {
    pub fn new(rank: usize) -> ClassMinOracle {
        ClassMinOracle {
            rank,
            balls: HashMap::new(),
            memo: HashMap::new(),
        }
    }

    pub fn class_min(&mut self, g: &WreathElement) -> Result<usize> {
        if let Some(&m) = self.memo.get(g) {
            return Ok(m);
        }
        let as_word = |x: &BaseElement| x.as_word().cloned().ok_or_else(|| Error::mismatch("a free group"));
        let sup: Vec<FreeWord> = g.support.iter().map(as_word).collect::<Result<_>>()?;
        let h = as_word(&g.translation)?;
        let l0 = length_of_words(&sup, &h);
        let radius = l0 / 2 + h.len() + 1;
        let rank = self.rank;
        let ball = self.balls.entry(radius).or_insert_with(|| free_ball(rank, radius));
        let mut best = l0;
        for x in ball.iter() {
            let hp = x.mul(&h).mul(&x.inverse());
            if hp.len() > l0 {
                continue;
            }
            let moved: Vec<FreeWord> = sup.iter().map(|p| x.mul(p)).collect();
            if hp.is_empty() {
                best = best.min(length_of_words(&moved, &hp));
                continue;
            }
            best = best.min(min_over_orbits(&moved, &hp, l0, best));
        }
        self.memo.insert(g.clone(), best);
        Ok(best)
    }
}

fn min_over_orbits(points: &[FreeWord], hp: &FreeWord, l0: usize, bound: usize) -> usize {
    let steps = 2 * l0 + 2;
    let hinv = hp.inverse();
    let mut orbits: Vec<(BTreeSet<FreeWord>, bool)> = Vec::new();
    for p in points {
        if let Some(o) = orbits.iter_mut().find(|o| o.0.contains(p)) {
            o.1 ^= true;
            continue;
        }
        let mut orbit = BTreeSet::new();
        orbit.insert(p.clone());
        for step in [hp, &hinv] {
            let mut cur = p.clone();
            for _ in 0..steps {
                cur = step.mul(&cur);
                orbit.insert(cur.clone());
            }
        }
        orbits.push((orbit, true));
    }
    let candidates: Vec<Vec<FreeWord>> = orbits
        .into_iter()
        .filter(|o| o.1)
        .map(|o| o.0.into_iter().filter(|q| q.len() <= l0).collect())
        .collect();
    if candidates.iter().any(|c: &Vec<FreeWord>| c.is_empty()) {
        return bound;
    }
    let mut best = bound;
    let mut choice = Vec::with_capacity(candidates.len());
    search(&candidates, &mut choice, hp, &mut best);
    best
}

fn search(cands: &[Vec<FreeWord>], choice: &mut Vec<FreeWord>, hp: &FreeWord, best: &mut usize) {
    if choice.len() == cands.len() {
        *best = (*best).min(length_of_words(choice, hp));
        return;
    }
    for q in &cands[choice.len()] {
        choice.push(q.clone());
        search(cands, choice, hp, best);
        choice.pop();
    }
}

/// Wreath element of `C₂ ≀ F_r` as a group element of `G(F_r, ∅)`.
pub fn wreath_as_element(g: &WreathElement) -> GElement {
    GElement {
        support: g.support.clone(),
        center: false,
        translation: g.translation.clone(),
    }
}

/// Conjugator search in `C₂ ≀ ℤ` over the ball of the given radius.
pub fn wreath_conjugator_search_z(g: &WreathElement, h: &WreathElement, radius: usize) -> Result<Option<WreathElement>> {
    let group = Group::over_integers(crate::ext::SymmetricSet::empty())?;
    let search = ConjugatorSearch::new(&group, GeneratingSet::Wreath, radius)?;
    Ok(search
        .find(&wreath_as_element(g), &wreath_as_element(h))
        .map(|c| group.tau(&c)))
}
