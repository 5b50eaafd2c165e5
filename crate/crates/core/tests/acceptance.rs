//! Acceptance suite: one line per criterion, tolerances pinned below.
//!
//! Criteria 1 and 2 compare ball sizes with the displayed rational
//! functions, whose Taylor coefficients are sphere sizes. They are run as
//! stated and reported as failures; the lines tagged `1b`/`2b` run the same
//! comparison against the cumulative series.

mod common;

use std::collections::{BTreeSet, HashMap, HashSet};
use std::time::{Duration, Instant};

use lampext::conjugacy::{conjugate_decide_gi, oracle::ConjugatorSearch};
use lampext::geo::{build_conjgeo_grammar, build_conjgeo_grammar_as_printed, conjgeo_oracle, enumerate_with_counts};
use lampext::growth::{bfs_ball, marked_ball_isomorphic, reconstruct_i_from_beta, series_c2wrz, series_gi_s};
use lampext::membership::{subgroup_membership_gi, SubgroupHandle, ZStatus};
use lampext::structure::FiniteQuotientWitness;
use lampext::word::{evaluate_symbols, GeneratingSet, GrowthSolver};
use lampext::{BaseElement, Error, GElement, Group, NElement, SymmetricSet};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use common::*;

const SEED: u64 = 0x1a3b_5c7d;
/// Integer comparisons are exact.
const TOLERANCE: i128 = 0;
const LIMIT_C1: Duration = Duration::from_secs(10);
const LIMIT_C2: Duration = Duration::from_secs(60);
const LIMIT_C3: Duration = Duration::from_secs(300);
const LIMIT_C5: Duration = Duration::from_secs(600);
const LIMIT_C10: Duration = Duration::from_secs(60);
const ASSOCIATIVITY_TRIPLES: usize = 10_000;
const MEMBERSHIP_INSTANCES_PER_BRANCH: usize = 20;
const MEMBERSHIP_TARGETS_PER_INSTANCE: usize = 10;

/// Criteria expected to fail as stated, with the reason.
const KNOWN_FAILURES: &[(&str, &str)] = &[
    ("1", "the displayed function expands to sphere sizes, not ball sizes"),
    ("2", "the displayed identity holds for sphere sizes, not ball sizes"),
];

struct Line {
    id: &'static str,
    pass: bool,
    detail: String,
}

fn line(id: &'static str, pass: bool, detail: impl Into<String>) -> Line {
    Line {
        id,
        pass,
        detail: detail.into(),
    }
}

fn within(pass: bool, elapsed: Duration, limit: Duration) -> bool {
    pass && elapsed < limit
}

fn first_mismatch(a: &[i128], b: &[i128]) -> Option<(usize, i128, i128)> {
    a.iter()
        .zip(b)
        .enumerate()
        .find(|(_, (x, y))| (*x - *y).abs() > TOLERANCE)
        .map(|(i, (x, y))| (i, *x, *y))
}

fn criterion_1() -> Vec<Line> {
    let start = Instant::now();
    let g = z_group(SymmetricSet::empty());
    let beta: Vec<i128> = bfs_ball(&g, GeneratingSet::Wreath, 10)
        .unwrap()
        .beta()
        .into_iter()
        .map(i128::from)
        .collect();
    let shown = series_c2wrz().coefficients(11).unwrap();
    let cumulative = series_c2wrz().cumulative().unwrap().coefficients(11).unwrap();
    let elapsed = start.elapsed();
    let literal = first_mismatch(&beta, &shown);
    vec![
        line(
            "1",
            within(literal.is_none(), elapsed, LIMIT_C1),
            match literal {
                None => format!("beta(0..10) equals the displayed coefficients ({elapsed:.2?})"),
                Some((n, b, c)) => format!("beta({n}) = {b} but coefficient {n} = {c}; beta = {beta:?}"),
            },
        ),
        line(
            "1b",
            within(first_mismatch(&beta, &cumulative).is_none(), elapsed, LIMIT_C1),
            format!("beta(0..10) = coefficients of displayed/(1-x) = {cumulative:?} ({elapsed:.2?})"),
        ),
    ]
}

fn criterion_2() -> Vec<Line> {
    let start = Instant::now();
    let sets = [SymmetricSet::empty(), SymmetricSet::finite_integers([1]), SymmetricSet::periodic(3, [1, 2])];
    let shown = series_gi_s().coefficients(9).unwrap();
    let cumulative = series_gi_s().cumulative().unwrap().coefficients(9).unwrap();
    let betas: Vec<Vec<i128>> = sets
        .iter()
        .map(|s| {
            bfs_ball(&z_group(s.clone()), GeneratingSet::Doubled, 8)
                .unwrap()
                .beta()
                .into_iter()
                .map(i128::from)
                .collect()
        })
        .collect();
    let elapsed = start.elapsed();
    let same = betas.windows(2).all(|w| w[0] == w[1]);
    let literal = betas.iter().find_map(|b| first_mismatch(b, &shown));
    let companion = same && betas.iter().all(|b| first_mismatch(b, &cumulative).is_none());
    vec![
        line(
            "2",
            within(same && literal.is_none(), elapsed, LIMIT_C2),
            match literal {
                None => format!("beta(0..8) equals the displayed coefficients for all three sets ({elapsed:.2?})"),
                Some((n, b, c)) => format!("beta({n}) = {b} but coefficient {n} = {c}; I-independent: {same}"),
            },
        ),
        line(
            "2b",
            within(companion, elapsed, LIMIT_C2),
            format!("beta(0..8) identical for the three sets and equal to the cumulative series {cumulative:?} ({elapsed:.2?})"),
        ),
    ]
}

fn criterion_3() -> Vec<Line> {
    let start = Instant::now();
    let sets = [
        SymmetricSet::empty(),
        SymmetricSet::finite_integers([1]),
        SymmetricSet::finite_integers([2, 3]),
        SymmetricSet::periodic(2, [1]),
        SymmetricSet::periodic(3, [1, 2]),
    ];
    let mut ok = true;
    let mut details = Vec::new();
    for s in &sets {
        let beta = bfs_ball(&z_group(s.clone()), GeneratingSet::Standard, 8).unwrap().beta();
        let expected: BTreeSet<i64> = (-3..=3).filter(|&n| s.contains(&BaseElement::Int(n))).collect();
        match reconstruct_i_from_beta(&|n| beta[n], 3) {
            Ok((got, steps)) => {
                ok &= got == expected;
                let diffs: Vec<i64> = steps.iter().map(|st| st.with as i64 - st.without as i64).collect();
                details.push(format!("{got:?} (with-without {diffs:?})"));
            }
            Err(e) => {
                ok = false;
                details.push(format!("error {e}"));
            }
        }
    }
    let elapsed = start.elapsed();
    vec![line("3", within(ok, elapsed, LIMIT_C3), format!("{} ({elapsed:.2?})", details.join("; ")))]
}

fn criterion_4() -> Vec<Line> {
    let mut rng = ChaCha8Rng::seed_from_u64(SEED ^ 4);
    let mut ok = true;
    let mut pairs = Vec::new();
    for k in 0..10 {
        let r = 1 + k % 2;
        let common: Vec<i64> = (1..=r as i64).filter(|_| rng.gen_bool(0.5)).collect();
        let tail = |rng: &mut ChaCha8Rng| -> Vec<i64> {
            let mut v = common.clone();
            v.extend((r as i64 + 1..=7).filter(|_| rng.gen_bool(0.5)));
            v
        };
        let (i, j) = (tail(&mut rng), tail(&mut rng));
        let same = marked_ball_isomorphic(&SymmetricSet::finite_integers(i.clone()), &SymmetricSet::finite_integers(j.clone()), r)
            .unwrap();
        ok &= same;
        pairs.push(format!("r={r} {i:?}/{j:?}:{same}"));
    }
    vec![line("4", ok, format!("10 pairs, radius 2r+3: {}", pairs.join(" ")))]
}

fn criterion_5() -> Vec<Line> {
    let start = Instant::now();
    let gr = build_conjgeo_grammar(2);
    let counts = enumerate_with_counts(&gr, 6, 8).unwrap();
    let oracle = conjgeo_oracle(6, 2).unwrap();
    let lang: BTreeSet<_> = counts.keys().cloned().collect();
    let ambiguous = counts.values().filter(|&&c| c != 1).count();
    let printed: BTreeSet<_> = enumerate_with_counts(&build_conjgeo_grammar_as_printed(2), 6, 8)
        .unwrap()
        .into_keys()
        .collect();
    let elapsed = start.elapsed();
    let ok = lang == oracle && ambiguous == 0;
    vec![line(
        "5",
        within(ok, elapsed, LIMIT_C5),
        format!(
            "|L| = {}, |oracle| = {}, symmetric difference {}, ambiguous {ambiguous}; as printed: {} extra, {} missing ({elapsed:.2?})",
            lang.len(),
            oracle.len(),
            lang.symmetric_difference(&oracle).count(),
            printed.difference(&oracle).count(),
            oracle.difference(&printed).count(),
        ),
    )]
}

fn criterion_6() -> Vec<Line> {
    let mut ok = true;
    let mut details = Vec::new();
    for set in [SymmetricSet::periodic(2, [1]), SymmetricSet::finite_integers([1, 2, 4])] {
        let g = z_group(set.clone());
        let elements = ball_elements(&g, 5);
        let search = ConjugatorSearch::new(&g, GeneratingSet::Standard, 8).unwrap();
        let (mut pairs, mut agree, mut conj, mut verified) = (0usize, 0usize, 0usize, 0usize);
        for x in &elements {
            let reach = search.conjugates(x);
            for y in &elements {
                pairs += 1;
                let decided = conjugate_decide_gi(&g, x, y).unwrap();
                if let Some(c) = &decided {
                    conj += 1;
                    if c.verified && g.conjugate(&c.conjugator, x) == *y {
                        verified += 1;
                    }
                }
                if decided.is_some() == reach.contains_key(y) {
                    agree += 1;
                }
            }
        }
        ok &= agree == pairs && verified == conj;
        details.push(format!("{}: {agree}/{pairs} agree, {verified}/{conj} certificates verify", set.render(g.base())));
    }
    vec![line("6", ok, details.join("; "))]
}

fn random_generator(rng: &mut ChaCha8Rng, g: &Group) -> GElement {
    loop {
        let x = random_element(rng, g, GeneratingSet::Standard, 4);
        if !g.is_identity(&x) && x != g.z() {
            return x;
        }
    }
}

fn criterion_7() -> Vec<Line> {
    let mut rng = ChaCha8Rng::seed_from_u64(SEED ^ 7);
    let pool = symmetric_pool();
    let mut done: HashMap<&'static str, usize> = HashMap::new();
    let (mut agree, mut total, mut witnesses_ok, mut witnesses) = (0usize, 0usize, 0usize, 0usize);
    let mut unknown_errors = (0usize, 0usize);
    let mut balls: HashMap<usize, (Vec<GElement>, HashSet<GElement>)> = HashMap::new();
    let mut attempts = 0;
    while (done.get("in").copied().unwrap_or(0) < MEMBERSHIP_INSTANCES_PER_BRANCH
        || done.get("out").copied().unwrap_or(0) < MEMBERSHIP_INSTANCES_PER_BRANCH)
        && attempts < 2000
    {
        attempts += 1;
        let si = rng.gen_range(0..pool.len());
        let g = z_group(pool[si].clone());
        let (ball, ball_set) = balls.entry(si).or_insert_with(|| {
            let b = ball_elements(&g, 8);
            let s = b.iter().cloned().collect();
            (b, s)
        });
        let k = rng.gen_range(1..=3);
        let gens: Vec<GElement> = (0..k).map(|_| random_generator(&mut rng, &g)).collect();
        let sub = SubgroupHandle::resolve(&g, gens.clone(), 6).unwrap();
        let branch = match sub.z_status() {
            ZStatus::ContainsZ(w) => {
                witnesses += 1;
                witnesses_ok += usize::from(w.evaluate(&g, &gens).unwrap() == g.z());
                "in"
            }
            ZStatus::NotContainsZ(_) => "out",
            ZStatus::Unknown => {
                unknown_errors.0 += 1;
                let r = subgroup_membership_gi(&g, &g.z(), &sub);
                unknown_errors.1 += usize::from(matches!(r, Err(Error::UnknownZStatus)));
                continue;
            }
        };
        if done.get(branch).copied().unwrap_or(0) >= MEMBERSHIP_INSTANCES_PER_BRANCH {
            continue;
        }
        *done.entry(branch).or_insert(0) += 1;
        let closure = closure_in_ball(&g, &gens, ball_set);
        let members: Vec<&GElement> = closure.iter().collect();
        for t in 0..MEMBERSHIP_TARGETS_PER_INSTANCE {
            let w = if t % 2 == 0 {
                members[rng.gen_range(0..members.len())].clone()
            } else {
                ball[rng.gen_range(0..ball.len())].clone()
            };
            let verdict = subgroup_membership_gi(&g, &w, &sub).unwrap();
            total += 1;
            agree += usize::from(verdict.member == closure.contains(&w));
            if let Some(e) = &verdict.expression {
                witnesses += 1;
                witnesses_ok += usize::from(e.evaluate(&g, &gens).unwrap() == w);
            }
        }
    }
    let per_branch = (done.get("in").copied().unwrap_or(0), done.get("out").copied().unwrap_or(0));
    let ok = per_branch.0 >= MEMBERSHIP_INSTANCES_PER_BRANCH
        && per_branch.1 >= MEMBERSHIP_INSTANCES_PER_BRANCH
        && agree == total
        && witnesses_ok == witnesses
        && unknown_errors.0 == unknown_errors.1;
    vec![line(
        "7",
        ok,
        format!(
            "instances z in H: {}, z not in H: {}; {agree}/{total} agree with the radius-8 closure; {witnesses_ok}/{witnesses} witnesses re-evaluate; {} unknown instances refused",
            per_branch.0, per_branch.1, unknown_errors.1
        ),
    )]
}

fn random_kernel(rng: &mut ChaCha8Rng, g: &Group, radius: usize) -> NElement {
    let elements = g.base().enumerate_ball(radius).unwrap();
    NElement {
        support: elements.into_iter().filter(|_| rng.gen_bool(0.3)).collect(),
        center: rng.gen_bool(0.5),
    }
}

fn criterion_8() -> Vec<Line> {
    let mut rng = ChaCha8Rng::seed_from_u64(SEED ^ 8);
    let families: Vec<(&str, Group)> = vec![
        ("Z", z_group(SymmetricSet::finite_integers([1, 3]))),
        ("Z periodic", z_group(SymmetricSet::periodic(3, [1, 2]))),
        ("Z^2", Group::new(lampext::BaseGroup::Lattice(2), SymmetricSet::parse("finite:{(1,0),(-1,0),(1,1),(-1,-1)}", &lampext::BaseGroup::Lattice(2)).unwrap()).unwrap()),
        ("F2", free_group(2, SymmetricSet::parse("finite:{s,S,st,TS}", &lampext::BaseGroup::Free(2)).unwrap())),
        ("F2 pullback", free_group(2, SymmetricSet::pullback(2, SymmetricSet::parse("finite:{(1,0),(-1,0)}", &lampext::BaseGroup::Lattice(2)).unwrap()))),
    ];
    let mut failures = 0usize;
    let mut checks = 0usize;
    for (_, g) in &families {
        let set = GeneratingSet::Standard;
        for _ in 0..ASSOCIATIVITY_TRIPLES {
            let x = random_element(&mut rng, g, set, 8);
            let y = random_element(&mut rng, g, set, 8);
            let z = random_element(&mut rng, g, set, 8);
            checks += 1;
            failures += usize::from(g.multiply(&g.multiply(&x, &y), &z) != g.multiply(&x, &g.multiply(&y, &z)));
        }
        let one = g.identity();
        let a = g.a();
        let zc = g.z();
        let mut rel = vec![g.multiply(&a, &a) == one, g.multiply(&zc, &zc) == one, g.multiply(&zc, &a) == g.multiply(&a, &zc)];
        for l in g.base().letters() {
            let t = g.translation(g.base().generator(l));
            rel.push(g.multiply(&zc, &t) == g.multiply(&t, &zc));
        }
        for h in g.base().enumerate_ball(3).unwrap() {
            let th = g.translation(h.clone());
            let conj = g.conjugate(&th, &a);
            let comm = g.multiply(&g.multiply(&a, &conj), &g.multiply(&a, &conj));
            rel.push(comm == if g.chi(&h) { zc.clone() } else { one.clone() });
        }
        checks += rel.len();
        failures += rel.iter().filter(|&&b| !b).count();
        for _ in 0..1000 {
            let (x, y, w) = (random_kernel(&mut rng, g, 2), random_kernel(&mut rng, g, 2), random_kernel(&mut rng, g, 2));
            let x4 = (0..4).fold(NElement::default(), |acc, _| g.n_multiply(&acc, &x));
            let comm = g.n_multiply(&g.n_multiply(&x, &y), &g.n_inverse(&g.n_multiply(&y, &x)));
            let outer = g.n_multiply(&g.n_multiply(&comm, &w), &g.n_inverse(&g.n_multiply(&w, &comm)));
            checks += 3;
            failures += usize::from(x4 != NElement::default());
            failures += usize::from(!comm.support.is_empty());
            failures += usize::from(outer != NElement::default());
        }
        for _ in 0..1000 {
            let x = random_element(&mut rng, g, GeneratingSet::Standard, 10);
            let trivial_image = g.tau(&x).support.is_empty() && g.base().is_identity(&x.translation);
            checks += 1;
            failures += usize::from(trivial_image != (x == one || x == zc));
        }
    }
    for set in symmetric_pool() {
        let g = z_group(set.clone());
        for n in 1..=12i64 {
            let t = g.translation(BaseElement::Int(n));
            let conj = g.conjugate(&t, &g.a());
            let w = g.multiply(&g.multiply(&g.a(), &conj), &g.multiply(&g.a(), &conj));
            checks += 1;
            failures += usize::from((w == g.identity()) == set.contains(&BaseElement::Int(n)));
        }
    }
    vec![line("8", failures == 0, format!("{checks} checks over {} families, {failures} failures", families.len()))]
}

fn residue_sets(n: u64) -> Vec<Vec<u64>> {
    let mut out = Vec::new();
    let reps: Vec<u64> = (1..=n / 2).collect();
    for mask in 0u32..1 << reps.len() {
        let mut r = BTreeSet::new();
        for (i, &x) in reps.iter().enumerate() {
            if mask >> i & 1 == 1 {
                r.insert(x);
                r.insert((n - x) % n);
            }
        }
        out.push(r.into_iter().collect());
    }
    out
}

fn criterion_9() -> Vec<Line> {
    let mut ok = true;
    let mut count = 0;
    for n in 1..=4u64 {
        for residues in residue_sets(n) {
            let g = z_group(SymmetricSet::periodic(n, residues.clone()));
            let w = FiniteQuotientWitness::new(&g, n).unwrap();
            let order = w.generated_order().unwrap() as u128;
            let z_image = w.z_image().unwrap();
            let good = order == w.order()
                && order == (1u128 << (n + 1)) * n as u128
                && w.verify_relations().unwrap()
                && z_image != w.quotient.target().identity();
            ok &= good;
            count += 1;
        }
    }
    vec![line("9", ok, format!("{count} periodic sets with n <= 4: orders 2^(n+1)n, relations hold, z survives"))]
}

fn criterion_10() -> Vec<Line> {
    let start = Instant::now();
    let g = z_group(SymmetricSet::finite_integers([1]));
    let beta = bfs_ball(&g, GeneratingSet::Standard, 3).unwrap().beta()[3];
    let mut solver = GrowthSolver::new(&g, 3, beta, 11).unwrap();
    let words = words_up_to(&GeneratingSet::Standard.symbols(g.base()), 3);
    let values: Vec<GElement> = words.iter().map(|w| evaluate_symbols(&g, w)).collect();
    let (mut agree, mut total) = (0usize, 0usize);
    for (u, gu) in words.iter().zip(&values) {
        for (v, gv) in words.iter().zip(&values) {
            total += 1;
            agree += usize::from(solver.equal(u, v).unwrap().equal == (gu == gv));
        }
    }
    let elapsed = start.elapsed();
    vec![line(
        "10",
        within(agree == total, elapsed, LIMIT_C10),
        format!(
            "{agree}/{total} pairs agree; stage {}, {} classes = beta(3) ({elapsed:.2?})",
            solver.stage(),
            solver.classes()
        ),
    )]
}

fn main() {
    let runs: Vec<fn() -> Vec<Line>> = vec![
        criterion_1,
        criterion_2,
        criterion_3,
        criterion_4,
        criterion_5,
        criterion_6,
        criterion_7,
        criterion_8,
        criterion_9,
        criterion_10,
    ];
    let mut unexpected = Vec::new();
    for run in runs {
        for l in run() {
            let known = KNOWN_FAILURES.iter().find(|(id, _)| *id == l.id);
            let tag = if l.pass { "PASS" } else { "FAIL" };
            match known {
                Some((_, why)) => println!("criterion {:<3} {tag}  {}  [expected: {why}]", l.id, l.detail),
                None => println!("criterion {:<3} {tag}  {}", l.id, l.detail),
            }
            if l.pass == known.is_some() {
                unexpected.push(l.id);
            }
        }
    }
    if !unexpected.is_empty() {
        println!("unexpected outcome for criteria {unexpected:?}");
        std::process::exit(1);
    }
}
