//! Ball growth: labelled Cayley balls, exact rational series, the
//! marked-ball comparison and recovery of `I` from ball sizes.

use std::collections::{BTreeSet, HashMap};

use crate::base::{BaseElement, BaseGroup};
use crate::error::{Error, Result};
use crate::ext::{GElement, Group, SymmetricSet};
use crate::word::{push_symbol, GeneratingSet, Symbol};

/// A univariate polynomial with integer coefficients, lowest degree first.
pub type Poly = Vec<i128>;

fn poly_mul(a: &[i128], b: &[i128]) -> Result<Poly> {
    if a.is_empty() || b.is_empty() {
        return Ok(Vec::new());
    }
    let mut out = vec![0i128; a.len() + b.len() - 1];
    for (i, &x) in a.iter().enumerate() {
        for (j, &y) in b.iter().enumerate() {
            let p = x.checked_mul(y).ok_or(Error::Overflow("polynomial product"))?;
            out[i + j] = out[i + j].checked_add(p).ok_or(Error::Overflow("polynomial product"))?;
        }
    }
    Ok(out)
}

fn poly_add(a: &[i128], b: &[i128]) -> Poly {
    let mut out = vec![0i128; a.len().max(b.len())];
    for (i, &x) in a.iter().enumerate() {
        out[i] += x;
    }
    for (i, &y) in b.iter().enumerate() {
        out[i] += y;
    }
    out
}

fn poly_pow(a: &[i128], n: u32) -> Result<Poly> {
    let mut acc = vec![1];
    for _ in 0..n {
        acc = poly_mul(&acc, a)?;
    }
    Ok(acc)
}

/// A power series given as `numerator / denominator` with the
/// denominator's constant term equal to `±1`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RationalSeries {
    numerator: Poly,
    denominator: Poly,
}

impl RationalSeries {
    pub fn new(numerator: Poly, denominator: Poly) -> Result<RationalSeries> {
        match denominator.first() {
            Some(1) | Some(-1) => Ok(RationalSeries {
                numerator,
                denominator,
            }),
            _ => Err(Error::Unsupported(
                "the denominator must have constant term 1 or -1".into(),
            )),
        }
    }

    pub fn numerator(&self) -> &[i128] {
        &self.numerator
    }

    pub fn denominator(&self) -> &[i128] {
        &self.denominator
    }

    /// The Taylor coefficients of degrees `0..count`, from the recurrence
    /// `Σ_j den[j]·c[n-j] = num[n]`.
    pub fn coefficients(&self, count: usize) -> Result<Vec<i128>> {
        let d0 = self.denominator[0];
        let mut c: Vec<i128> = Vec::with_capacity(count);
        for n in 0..count {
            let mut acc = self.numerator.get(n).copied().unwrap_or(0);
            for j in 1..self.denominator.len().min(n + 1) {
                let p = self.denominator[j]
                    .checked_mul(c[n - j])
                    .ok_or(Error::Overflow("series coefficient"))?;
                acc = acc.checked_sub(p).ok_or(Error::Overflow("series coefficient"))?;
            }
            c.push(acc * d0);
        }
        Ok(c)
    }

    /// The series of partial sums, `f / (1 - x)`.
    pub fn cumulative(&self) -> Result<RationalSeries> {
        RationalSeries::new(self.numerator.clone(), poly_mul(&self.denominator, &[1, -1])?)
    }
}

/// The rational function `(1+x)³(1−x)²(1+x+x²) / ((1−x²−x³)²(1−x−x²))`
/// for `C₂ ≀ ℤ` with generators `{a, t, t⁻¹}`. Its coefficients are sphere
/// sizes; `cumulative()` gives ball sizes.
pub fn series_c2wrz() -> RationalSeries {
    let num = poly_mul(
        &poly_mul(&poly_pow(&[1, 1], 3).unwrap(), &poly_pow(&[1, -1], 2).unwrap()).unwrap(),
        &[1, 1, 1],
    )
    .unwrap();
    let den = poly_mul(&poly_pow(&[1, 0, -1, -1], 2).unwrap(), &[1, -1, -1]).unwrap();
    RationalSeries::new(num, den).expect("constant term is 1")
}

/// `1 + x² + 2(f − 1)` where `f = series_c2wrz()`: the series for `G(ℤ, I)`
/// with the doubled generating set, for every `I`.
pub fn series_gi_s() -> RationalSeries {
    let f = series_c2wrz();
    let shift = poly_mul(&[-1, 0, 1], &f.denominator).unwrap();
    let twice: Poly = f.numerator.iter().map(|x| 2 * x).collect();
    RationalSeries::new(poly_add(&shift, &twice), f.denominator.clone()).expect("constant term is 1")
}

/// A ball in a Cayley graph with its labelled edges. Vertices are listed in
/// BFS order, with generators tried in the fixed symbol order, so the
/// neighbour table is a canonical code of the rooted labelled ball.
#[derive(Clone, Debug)]
pub struct LabelledBall {
    pub radius: usize,
    pub generators: Vec<Symbol>,
    pub vertices: Vec<GElement>,
    pub distance: Vec<usize>,
    /// `neighbors[v][s]` is the index of `v·s` when it lies in the ball.
    pub neighbors: Vec<Vec<Option<u32>>>,
}

impl LabelledBall {
    /// `β(n)` for `n = 0..=radius`.
    pub fn beta(&self) -> Vec<u64> {
        let mut counts = vec![0u64; self.radius + 1];
        for &d in &self.distance {
            counts[d] += 1;
        }
        let mut acc = 0;
        counts
            .into_iter()
            .map(|c| {
                acc += c;
                acc
            })
            .collect()
    }

    /// Sphere sizes for `n = 0..=radius`.
    pub fn spheres(&self) -> Vec<u64> {
        let mut counts = vec![0u64; self.radius + 1];
        for &d in &self.distance {
            counts[d] += 1;
        }
        counts
    }

    pub fn len(&self) -> usize {
        self.vertices.len()
    }

    pub fn is_empty(&self) -> bool {
        self.vertices.is_empty()
    }

    pub fn edges(&self) -> impl Iterator<Item = (usize, Symbol, usize)> + '_ {
        self.neighbors.iter().enumerate().flat_map(move |(v, row)| {
            row.iter()
                .enumerate()
                .filter_map(move |(s, t)| t.map(|t| (v, self.generators[s], t as usize)))
        })
    }
}

/// Largest radius `bfs_ball` accepts for the given base group.
pub fn default_radius_limit(base: &BaseGroup) -> usize {
    match base {
        BaseGroup::Integers | BaseGroup::Cyclic(_) => 10,
        BaseGroup::Free(r) if *r <= 2 => 7,
        BaseGroup::Free(_) => 5,
        BaseGroup::Lattice(_) => 6,
    }
}

pub fn bfs_ball(group: &Group, set: GeneratingSet, radius: usize) -> Result<LabelledBall> {
    bfs_ball_with_limit(group, set, radius, default_radius_limit(group.base()))
}

/// `bfs_ball` with an explicit radius limit in place of the default.
pub fn bfs_ball_with_limit(group: &Group, set: GeneratingSet, radius: usize, limit: usize) -> Result<LabelledBall> {
    if radius > limit {
        return Err(Error::LimitExceeded {
            what: "ball radius",
            value: radius,
            limit,
        });
    }
    bfs_ball_unbounded(group, set, radius)
}

pub(crate) fn bfs_ball_unbounded(group: &Group, set: GeneratingSet, radius: usize) -> Result<LabelledBall> {
    let generators = set.symbols(group.base());
    let mut index: HashMap<GElement, u32> = HashMap::new();
    let mut vertices = vec![group.identity()];
    let mut distance = vec![0usize];
    index.insert(group.identity(), 0);
    let mut head = 0;
    while head < vertices.len() {
        if distance[head] < radius {
            for &s in &generators {
                let mut y = vertices[head].clone();
                push_symbol(group, &mut y, s);
                if !index.contains_key(&y) {
                    index.insert(y.clone(), vertices.len() as u32);
                    vertices.push(y);
                    distance.push(distance[head] + 1);
                }
            }
        }
        head += 1;
    }
    let neighbors = vertices
        .iter()
        .map(|v| {
            generators
                .iter()
                .map(|&s| {
                    let mut y = v.clone();
                    push_symbol(group, &mut y, s);
                    index.get(&y).copied()
                })
                .collect()
        })
        .collect();
    Ok(LabelledBall {
        radius,
        generators,
        vertices,
        distance,
        neighbors,
    })
}

/// Cumulative ball sizes of `G(ℤ, I)` under `S′` for radii `0..=radius`.
pub fn beta_standard(set: &SymmetricSet, radius: usize) -> Result<Vec<u64>> {
    let g = Group::over_integers(set.clone())?;
    Ok(bfs_ball(&g, GeneratingSet::Standard, radius)?.beta())
}

/// Whether the balls of radius `2r+3` in `(G_I, S′)` and `(G_J, S′)` are
/// isomorphic as rooted edge-labelled graphs.
pub fn marked_ball_isomorphic(i: &SymmetricSet, j: &SymmetricSet, r: usize) -> Result<bool> {
    let radius = 2 * r + 3;
    let bi = bfs_ball(&Group::over_integers(i.clone())?, GeneratingSet::Standard, radius)?;
    let bj = bfs_ball(&Group::over_integers(j.clone())?, GeneratingSet::Standard, radius)?;
    // Labels are deterministic, so an isomorphism fixing the root is unique
    // if it exists and matches BFS discovery orders.
    Ok(bi.distance == bj.distance && bi.neighbors == bj.neighbors)
}

/// One step of the reconstruction of `I` from ball sizes.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ReconstructionStep {
    pub candidate: i64,
    pub radius: usize,
    pub observed: u64,
    pub without: u64,
    pub with: u64,
    pub member: bool,
}

/// Recovers `I ∩ [-r_max, r_max]` from an oracle for `β_{G_I, S′}` by deciding
/// `r+1 ∈ I` from `β(2r+4)` for `r = 0..r_max`.
pub fn reconstruct_i_from_beta(
    beta: &dyn Fn(usize) -> u64,
    r_max: usize,
) -> Result<(BTreeSet<i64>, Vec<ReconstructionStep>)> {
    let mut known: BTreeSet<i64> = BTreeSet::new();
    let mut steps = Vec::new();
    for r in 0..r_max {
        let radius = 2 * r + 4;
        let candidate = r as i64 + 1;
        let base = SymmetricSet::Finite(known.iter().map(|&n| BaseElement::Int(n)).collect());
        let mut extended = known.clone();
        extended.insert(candidate);
        extended.insert(-candidate);
        let ext = SymmetricSet::Finite(extended.iter().map(|&n| BaseElement::Int(n)).collect());
        let without = beta_standard(&base, radius)?[radius];
        let with = beta_standard(&ext, radius)?[radius];
        let observed = beta(radius);
        if with == without {
            return Err(Error::Inconsistent(format!(
                "both branches give beta({radius}) = {with}"
            )));
        }
        let member = if observed == with {
            true
        } else if observed == without {
            false
        } else {
            return Err(Error::Inconsistent(format!(
                "beta({radius}) = {observed} matches neither {without} nor {with}"
            )));
        };
        if member {
            known = extended;
        }
        steps.push(ReconstructionStep {
            candidate,
            radius,
            observed,
            without,
            with,
            member,
        });
    }
    Ok((known, steps))
}
