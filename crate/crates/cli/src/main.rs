//! `lampext`: command-line access to the decision procedures, enumerators
//! and emitters of the `lampext` library.
//!
//! Exit codes: 0 when the query was decided (whatever the answer), 2 when it
//! was left undecided within the configured bounds, 1 on malformed input.

mod output;

use std::io::{self, Write};
use std::process::ExitCode;

use anyhow::{anyhow, bail, Context, Result};
use clap::{Args, Parser, Subcommand, ValueEnum};
use lampext::conjugacy::{conjugate_decide_gi, is_conjugacy_minimal_fr, wreath_conjugate_decide_z, wreath_length_fr};
use lampext::conjugacy::oracle::ClassMinOracle;
use lampext::geo::{self, GrammarVariant, DEFAULT_ENUMERATION_LIMIT};
use lampext::growth::{self, default_radius_limit};
use lampext::membership::{self, ZProof, DEFAULT_Z_SEARCH_BOUND};
use lampext::structure::{self, Periodicity};
use lampext::word::{self, element_to_word, parse_element, parse_symbols, render_element, render_symbols};
use lampext::{BaseGroup, GElement, GeneratingSet, Group, SubgroupHandle, SubgroupWord, SymmetricSet, ZStatus};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde_json::Value;

use output::{emit, Format, Record};

#[derive(Parser)]
#[command(name = "lampext", version, about = "Central extensions of lamplighter groups")]
struct Cli {
    /// Output format.
    #[arg(long, global = true, value_enum, default_value = "text")]
    format: Format,
    /// Overrides enumeration bounds (ball radius, word length, solver stage).
    #[arg(long, global = true)]
    limit: Option<usize>,
    /// Seed for randomized sampling.
    #[arg(long, global = true, default_value_t = 0)]
    seed: u64,
    #[command(subcommand)]
    command: Command,
}

#[derive(Args, Clone)]
struct GroupArgs {
    /// `zI`, `zdI`, `frI`, `zmodN`, `wreath-z` or `wreath-fR`.
    #[arg(long, default_value = "zI")]
    group: String,
    /// Descriptor of I, e.g. `finite:{1,-1}` or `periodic:p=4,r={1,3}`.
    #[arg(long = "set-desc", visible_alias = "set", default_value = "finite:{}")]
    set_desc: String,
    /// Rank of `ℤ^d` or `F_r`.
    #[arg(long, default_value_t = 2)]
    rank: usize,
}

impl GroupArgs {
    /// The group and whether it was requested as a plain lamplighter.
    fn build(&self) -> Result<(Group, bool)> {
        let g = self.group.as_str();
        let (base, wreath) = match g {
            "zI" | "z" => (BaseGroup::Integers, false),
            "zdI" | "zd" => (BaseGroup::Lattice(self.rank), false),
            "frI" | "fr" => (BaseGroup::Free(self.rank), false),
            "wreath-z" => (BaseGroup::Integers, true),
            "wreath-fr" => (BaseGroup::Free(self.rank), true),
            _ => {
                if let Some(n) = g.strip_prefix("wreath-f") {
                    (BaseGroup::Free(n.parse().with_context(|| format!("bad rank in {g:?}"))?), true)
                } else if let Some(n) = g.strip_prefix("zmod") {
                    (BaseGroup::Cyclic(n.parse().with_context(|| format!("bad modulus in {g:?}"))?), false)
                } else {
                    bail!("unknown group {g:?}");
                }
            }
        };
        let set = SymmetricSet::parse(&self.set_desc, &base)?;
        Ok((Group::new(base, set)?, wreath))
    }
}

fn set_of(text: &str) -> Result<SymmetricSet> {
    Ok(SymmetricSet::parse(text, &BaseGroup::Integers)?)
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum Variant {
    Corrected,
    AsPrinted,
}

impl From<Variant> for GrammarVariant {
    fn from(v: Variant) -> Self {
        match v {
            Variant::Corrected => GrammarVariant::Corrected,
            Variant::AsPrinted => GrammarVariant::AsPrinted,
        }
    }
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum Gens {
    /// `S′ = {a, t^±, z}`.
    Standard,
    /// `S = {a, az, t^±, t^±z}`.
    Doubled,
    /// `T = {a, t^±}`.
    Wreath,
}

impl From<Gens> for GeneratingSet {
    fn from(g: Gens) -> Self {
        match g {
            Gens::Standard => GeneratingSet::Standard,
            Gens::Doubled => GeneratingSet::Doubled,
            Gens::Wreath => GeneratingSet::Wreath,
        }
    }
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum Series {
    /// `C₂ ≀ ℤ` with `T`.
    C2wrz,
    /// `G(ℤ, I)` with `S`.
    GiS,
}

#[derive(Subcommand)]
enum Command {
    /// Decide whether a word is the identity.
    Wp {
        #[command(flatten)]
        group: GroupArgs,
        #[arg(long)]
        word: String,
    },
    /// Print the canonical form of a word.
    NormalForm {
        #[command(flatten)]
        group: GroupArgs,
        #[arg(long)]
        word: String,
    },
    /// Compare two words using only relators and ball sizes (finite I).
    WpGrowth {
        #[command(flatten)]
        group: GroupArgs,
        #[arg(long)]
        u: String,
        #[arg(long)]
        v: String,
    },
    /// Decide conjugacy over ℤ and print a conjugator.
    Conj {
        #[command(flatten)]
        group: GroupArgs,
        #[arg(long)]
        g: String,
        #[arg(long)]
        h: String,
    },
    /// Decide whether an element of C₂ ≀ F_r has minimal length in its class.
    ConjMin {
        #[command(flatten)]
        group: GroupArgs,
        #[arg(long)]
        g: String,
        /// Also compute the class minimum by brute force.
        #[arg(long)]
        oracle: bool,
    },
    /// Parse a word with the conjugacy-geodesic grammar.
    ConjGeo {
        #[arg(long, default_value_t = 2)]
        rank: usize,
        #[arg(long)]
        word: String,
        #[arg(long, value_enum, default_value = "corrected")]
        variant: Variant,
        /// Use the grammar lifted to G(F_r, I).
        #[arg(long)]
        lifted: bool,
        /// Print the leftmost derivation.
        #[arg(long)]
        derivation: bool,
    },
    /// Emit or check the conjugacy-geodesic grammar.
    Grammar {
        #[command(subcommand)]
        command: GrammarCommand,
    },
    /// Balls, series and reconstruction of I from growth.
    Growth {
        #[command(subcommand)]
        command: GrowthCommand,
    },
    /// Subgroup or submonoid membership in G(ℤ, I).
    Member {
        #[command(flatten)]
        group: GroupArgs,
        /// Generators separated by `;`.
        #[arg(long)]
        sub: String,
        #[arg(long)]
        word: String,
        /// `auto`, `in:<generator indices>` or `out`.
        #[arg(long = "z-status", default_value = "auto")]
        z_status: String,
        #[arg(long = "search-bound", default_value_t = DEFAULT_Z_SEARCH_BOUND)]
        search_bound: usize,
        /// Treat the generators as monoid generators.
        #[arg(long)]
        monoid: bool,
    },
    /// Residual finiteness of G(ℤ, I) with a finite quotient witness.
    Rf {
        #[arg(long = "set-desc", visible_alias = "set")]
        set_desc: String,
    },
    /// Decide G_I ≅ G_J.
    Iso {
        #[arg(long)]
        left: String,
        #[arg(long)]
        right: String,
    },
    /// Classify a set as periodic or eventually periodic.
    Periodicity {
        #[arg(long = "set-desc", visible_alias = "set")]
        set_desc: String,
    },
    /// Quotients of the finite witness by normal subgroups avoiding z.
    Quotient {
        #[arg(long = "set-desc", visible_alias = "set")]
        set_desc: String,
    },
    /// Randomized consistency checks of the arithmetic and decisions.
    Selftest {
        #[arg(long, default_value_t = 500)]
        count: usize,
    },
}

#[derive(Subcommand)]
enum GrammarCommand {
    /// Print the productions.
    Emit {
        #[arg(long, default_value_t = 2)]
        rank: usize,
        #[arg(long, value_enum, default_value = "corrected")]
        variant: Variant,
        #[arg(long)]
        lifted: bool,
    },
    /// Compare the language with the brute-force oracle up to a length.
    Check {
        #[arg(long, default_value_t = 2)]
        rank: usize,
        #[arg(long, default_value_t = 4)]
        length: usize,
        #[arg(long, value_enum, default_value = "corrected")]
        variant: Variant,
    },
}

#[derive(Subcommand)]
enum GrowthCommand {
    /// Ball sizes by breadth-first search.
    Ball {
        #[command(flatten)]
        group: GroupArgs,
        #[arg(long)]
        radius: usize,
        #[arg(long, value_enum, default_value = "standard")]
        gens: Gens,
    },
    /// Coefficients of a rational growth series.
    Series {
        #[arg(long, value_enum, default_value = "c2wrz")]
        which: Series,
        #[arg(long, default_value_t = 10)]
        coeffs: usize,
        /// Ball sizes instead of sphere sizes.
        #[arg(long)]
        cumulative: bool,
    },
    /// Recover I ∩ [-r, r] from ball sizes of G(ℤ, I) under S′.
    Reconstruct {
        #[arg(long = "set-desc", visible_alias = "set")]
        set_desc: String,
        #[arg(long, default_value_t = 3)]
        rmax: usize,
    },
    /// Compare marked balls of radius 2r+3.
    Marked {
        #[arg(long)]
        left: String,
        #[arg(long)]
        right: String,
        #[arg(long, default_value_t = 1)]
        r: usize,
    },
}

enum Outcome {
    Decided,
    Undecided,
}

fn yes(b: bool) -> Value {
    Value::Bool(b)
}

fn word_of(group: &Group, x: &GElement) -> String {
    render_symbols(&element_to_word(group, x), group.base())
}

fn run(cli: &Cli, records: &mut Vec<Record>) -> Result<Outcome> {
    match &cli.command {
        Command::Wp { group, word: w } => {
            let (g, _) = group.build()?;
            let x = parse_element(&g, w)?;
            records.push(Record::new().with("identity", yes(g.is_identity(&x))));
        }
        Command::NormalForm { group, word: w } => {
            let (g, _) = group.build()?;
            let x = parse_element(&g, w)?;
            records.push(Record::new().with("normal-form", render_element(&g, &x)));
        }
        Command::WpGrowth { group, u, v } => {
            let (g, _) = group.build()?;
            let (u, v) = (parse_symbols(u, g.base())?, parse_symbols(v, g.base())?);
            let beta = |n: usize| growth::beta_standard(g.set(), n).map(|b| b[n]).unwrap_or(0);
            let report = word::word_problem_from_growth(&g, &u, &v, &beta, cli.limit.unwrap_or(8))?;
            records.push(
                Record::new()
                    .with("equal", yes(report.equal))
                    .with("stage", report.stage)
                    .with("classes", report.classes)
                    .with("beta", report.beta),
            );
        }
        Command::Conj { group, g: gs, h: hs } => {
            let (g, wreath) = group.build()?;
            let (x, y) = (parse_element(&g, gs)?, parse_element(&g, hs)?);
            let mut r = Record::new();
            if wreath {
                let c = wreath_conjugate_decide_z(&g.tau(&x), &g.tau(&y))?;
                r = r.with("conjugate", yes(c.is_some()));
                if let Some(c) = c {
                    let lift = GElement {
                        support: c.conjugator.support,
                        center: false,
                        translation: c.conjugator.translation,
                    };
                    r = r.with("certificate", word_of(&g, &lift));
                }
            } else {
                let c = conjugate_decide_gi(&g, &x, &y)?;
                r = r.with("conjugate", yes(c.is_some()));
                if let Some(c) = c {
                    r = r.with("certificate", word_of(&g, &c.conjugator));
                }
            }
            records.push(r);
        }
        Command::ConjMin { group, g: gs, oracle } => {
            let (g, _) = group.build()?;
            if !matches!(g.base(), BaseGroup::Free(_)) {
                bail!("conj-min needs a free base group, e.g. --group wreath-f2");
            }
            let w = g.tau(&parse_element(&g, gs)?);
            let len = wreath_length_fr(&w)?;
            let mut r = Record::new()
                .with("minimal", yes(is_conjugacy_minimal_fr(&w)?))
                .with("length", len);
            if *oracle {
                r = r.with("class-minimum", ClassMinOracle::new(g.base().rank()).class_min(&w)?);
            }
            records.push(r);
        }
        Command::ConjGeo {
            rank,
            word: w,
            variant,
            lifted,
            derivation,
        } => {
            let mut gr = geo::build_grammar(*rank, (*variant).into());
            if *lifted {
                gr = geo::lift_grammar(&gr);
            }
            let symbols = parse_symbols(w, &BaseGroup::Free(*rank))?;
            let p = geo::recognize(&gr, &symbols)?;
            let mut r = Record::new()
                .with("accepted", yes(p.accepted))
                .with("derivations", p.derivations);
            if *derivation {
                let steps = p.derivation.map(|d| d.leftmost(&gr).join("; ")).unwrap_or_default();
                r = r.with("derivation", steps);
            }
            records.push(r);
        }
        Command::Grammar { command } => match command {
            GrammarCommand::Emit { rank, variant, lifted } => {
                let mut gr = geo::build_grammar(*rank, (*variant).into());
                if *lifted {
                    gr = geo::lift_grammar(&gr);
                }
                for line in gr.render().lines() {
                    records.push(Record::new().with("production", line));
                }
            }
            GrammarCommand::Check { rank, length, variant } => {
                let gr = geo::build_grammar(*rank, (*variant).into());
                let counts = geo::enumerate_with_counts(&gr, *length, cli.limit.unwrap_or(DEFAULT_ENUMERATION_LIMIT))?;
                let oracle = geo::conjgeo_oracle(*length, *rank)?;
                let extra = counts.keys().filter(|w| !oracle.contains(*w)).count();
                let missing = oracle.iter().filter(|w| !counts.contains_key(*w)).count();
                let ambiguous = counts.values().filter(|&&c| c != 1).count();
                records.push(
                    Record::new()
                        .with("language", counts.len())
                        .with("oracle", oracle.len())
                        .with("extra", extra)
                        .with("missing", missing)
                        .with("ambiguous", ambiguous)
                        .with("equal", yes(extra == 0 && missing == 0)),
                );
            }
        },
        Command::Growth { command } => growth_command(cli, command, records)?,
        Command::Member {
            group,
            sub,
            word: w,
            z_status,
            search_bound,
            monoid,
        } => {
            let (g, _) = group.build()?;
            let gens: Vec<GElement> = sub
                .split(';')
                .map(|t| parse_element(&g, t))
                .collect::<lampext::Result<_>>()?;
            let x = parse_element(&g, w)?;
            if *monoid {
                let member = membership::submonoid_membership(&g, &x, &gens, *search_bound)?;
                records.push(Record::new().with("member", yes(member)));
                return Ok(Outcome::Decided);
            }
            let status = match z_status.as_str() {
                "auto" => membership::resolve_z_status(&g, &gens, *search_bound)?,
                "out" => ZStatus::NotContainsZ(ZProof::Asserted),
                other => match other.strip_prefix("in:") {
                    Some(idx) => ZStatus::ContainsZ(SubgroupWord::parse(&idx.replace(',', " "))?),
                    None => bail!("--z-status must be auto, out or in:<indices>, not {other:?}"),
                },
            };
            let (status_name, detail) = match &status {
                ZStatus::ContainsZ(w) => ("contains-z", w.to_string()),
                ZStatus::NotContainsZ(p) => ("avoids-z", proof_name(p)),
                ZStatus::Unknown => ("unknown", String::new()),
            };
            if matches!(status, ZStatus::Unknown) {
                records.push(Record::new().with("status", "unknown").with("search-bound", *search_bound));
                return Ok(Outcome::Undecided);
            }
            let handle = SubgroupHandle::new(&g, gens, status)?;
            let v = membership::subgroup_membership_gi(&g, &x, &handle)?;
            records.push(
                Record::new()
                    .with("member", yes(v.member))
                    .with("expression", v.expression.map(|e| e.to_string()).unwrap_or_default())
                    .with("z-status", status_name)
                    .with("z-detail", detail),
            );
        }
        Command::Rf { set_desc } => {
            let rf = structure::is_residually_finite_gi(&set_of(set_desc)?)?;
            let mut r = Record::new().with("residually-finite", yes(rf.residually_finite));
            if let Some(w) = &rf.witness {
                let target = w.quotient.target();
                r = r
                    .with("modulus", w.modulus)
                    .with("image", format!("{:?}", w.image))
                    .with("order", w.order().to_string())
                    .with("z-image", render_element(target, &w.z_image()?))
                    .with("relations", yes(w.verify_relations()?));
            }
            records.push(r);
        }
        Command::Iso { left, right } => {
            let same = structure::iso_gi(&set_of(left)?, &set_of(right)?)?;
            records.push(Record::new().with("isomorphic", yes(same)));
        }
        Command::Periodicity { set_desc } => {
            let r = match structure::eventual_periodicity(&set_of(set_desc)?) {
                Periodicity::Periodic(p) => Record::new().with("periodicity", "periodic").with("period", p),
                Periodicity::EventuallyPeriodic { period, threshold } => Record::new()
                    .with("periodicity", "eventually-periodic")
                    .with("period", period)
                    .with("threshold", threshold),
                Periodicity::NotApplicable => Record::new().with("periodicity", "not-applicable"),
            };
            records.push(r);
        }
        Command::Quotient { set_desc } => {
            let rf = structure::is_residually_finite_gi(&set_of(set_desc)?)?;
            let w = rf
                .witness
                .ok_or_else(|| anyhow!("the set is not periodic, so there is no finite witness"))?;
            for q in structure::quotient_experiment(&w)? {
                records.push(
                    Record::new()
                        .with("kernel-order", q.kernel_order)
                        .with("quotient-order", q.quotient_order),
                );
            }
        }
        Command::Selftest { count } => {
            let (checks, failures) = selftest(cli.seed, *count)?;
            records.push(
                Record::new()
                    .with("seed", cli.seed)
                    .with("checks", checks)
                    .with("failures", failures),
            );
            if failures > 0 {
                bail!("{failures} of {checks} checks failed");
            }
        }
    }
    Ok(Outcome::Decided)
}

fn proof_name(p: &ZProof) -> String {
    match p {
        ZProof::Asserted => "asserted".into(),
        ZProof::LampAndTranslation { n } => format!("no multiple of {n} in I"),
        ZProof::Character => "character".into(),
        ZProof::FiniteClosure { order } => format!("finite subgroup of order {order}"),
    }
}

fn growth_command(cli: &Cli, command: &GrowthCommand, records: &mut Vec<Record>) -> Result<()> {
    match command {
        GrowthCommand::Ball { group, radius, gens } => {
            let (g, _) = group.build()?;
            let limit = cli.limit.unwrap_or_else(|| default_radius_limit(g.base()));
            let ball = growth::bfs_ball_with_limit(&g, (*gens).into(), *radius, limit)?;
            for (n, (b, s)) in ball.beta().into_iter().zip(ball.spheres()).enumerate() {
                records.push(Record::new().with("n", n).with("ball", b).with("sphere", s));
            }
        }
        GrowthCommand::Series {
            which,
            coeffs,
            cumulative,
        } => {
            let mut s = match which {
                Series::C2wrz => growth::series_c2wrz(),
                Series::GiS => growth::series_gi_s(),
            };
            if *cumulative {
                s = s.cumulative()?;
            }
            let c: Vec<Value> = s
                .coefficients(*coeffs)?
                .into_iter()
                .map(|x| i64::try_from(x).map(Value::from).map_err(|_| anyhow!("coefficient {x} overflows")))
                .collect::<Result<_>>()?;
            records.push(Record::new().with("coefficients", c));
        }
        GrowthCommand::Reconstruct { set_desc, rmax } => {
            let set = set_of(set_desc)?;
            let beta = |n: usize| growth::beta_standard(&set, n).map(|b| b[n]).unwrap_or(0);
            let (_, steps) = growth::reconstruct_i_from_beta(&beta, *rmax)?;
            let mut known: Vec<i64> = Vec::new();
            for s in steps {
                if s.member {
                    known.extend([-s.candidate, s.candidate]);
                    known.sort_unstable();
                }
                let shown: Vec<String> = known.iter().map(i64::to_string).collect();
                records.push(
                    Record::new()
                        .with("candidate", s.candidate)
                        .with("radius", s.radius)
                        .with("observed", s.observed)
                        .with("without", s.without)
                        .with("with", s.with)
                        .with("member", yes(s.member))
                        .with("known", format!("{{{}}}", shown.join(","))),
                );
            }
        }
        GrowthCommand::Marked { left, right, r } => {
            let same = growth::marked_ball_isomorphic(&set_of(left)?, &set_of(right)?, *r)?;
            records.push(Record::new().with("radius", 2 * r + 3).with("isomorphic", yes(same)));
        }
    }
    Ok(())
}

/// Random products in several groups: associativity, inverses, normal-form
/// round trips and conjugacy certificates.
fn selftest(seed: u64, count: usize) -> Result<(usize, usize)> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let groups = [
        Group::over_integers(SymmetricSet::finite_integers([1]))?,
        Group::over_integers(SymmetricSet::periodic(3, [1, 2]))?,
        Group::new(BaseGroup::Free(2), SymmetricSet::parse("abpull:finite:{(1,0),(-1,0)}", &BaseGroup::Free(2))?)?,
    ];
    let (mut checks, mut failures) = (0, 0);
    let mut check = |ok: bool| {
        checks += 1;
        failures += usize::from(!ok);
    };
    for _ in 0..count {
        let g = &groups[rng.gen_range(0..groups.len())];
        let alphabet = GeneratingSet::Standard.symbols(g.base());
        let random = |rng: &mut ChaCha8Rng| {
            let len = rng.gen_range(0..=10);
            let w: Vec<_> = (0..len).map(|_| alphabet[rng.gen_range(0..alphabet.len())]).collect();
            word::evaluate_symbols(g, &w)
        };
        let (x, y, z) = (random(&mut rng), random(&mut rng), random(&mut rng));
        check(g.multiply(&g.multiply(&x, &y), &z) == g.multiply(&x, &g.multiply(&y, &z)));
        check(g.is_identity(&g.multiply(&x, &g.inverse(&x))));
        check(parse_element(g, &render_element(g, &x))? == x);
        if *g.base() == BaseGroup::Integers {
            let h = g.conjugate(&y, &x);
            let c = conjugate_decide_gi(g, &x, &h)?;
            check(c.is_some_and(|c| g.conjugate(&c.conjugator, &x) == h));
        }
    }
    Ok((checks, failures))
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(c) => c,
        Err(e) => {
            let _ = e.print();
            return match e.kind() {
                clap::error::ErrorKind::DisplayHelp | clap::error::ErrorKind::DisplayVersion => ExitCode::SUCCESS,
                _ => ExitCode::from(1),
            };
        }
    };
    let mut records = Vec::new();
    let outcome = run(&cli, &mut records);
    let stdout = io::stdout();
    let mut out = stdout.lock();
    if let Err(e) = emit(&mut out, cli.format, &records) {
        eprintln!("error: {e:#}");
        return ExitCode::from(1);
    }
    let _ = out.flush();
    match outcome {
        Ok(Outcome::Decided) => ExitCode::SUCCESS,
        Ok(Outcome::Undecided) => ExitCode::from(2),
        Err(e) => {
            eprintln!("error: {e:#}");
            let undecided = e.downcast_ref::<lampext::Error>().is_some_and(|x| x.is_undecided());
            ExitCode::from(if undecided { 2 } else { 1 })
        }
    }
}
