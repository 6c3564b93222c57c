//! Acceptance run: one PASS/FAIL line per criterion.
//!
//! Runs as a plain binary (`harness = false`) so the lines always show up in
//! `cargo test` output; exits non-zero if any criterion fails.

use std::io::Write;
use std::process::{Command, Stdio};
use std::time::Instant;

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;

use polyarc_core::bridge::{to_bicoloured, verify_isomorphism, DecoratedPolygon};
use polyarc_core::shelling::{greedy_shelling, shell_coloured_convex, shell_coloured_punctured};
use polyarc_core::sweep::{colourings, is_nontrivial};
use polyarc_core::{
    build_complex, certify, check_wilson_property, enumerate_arcs, enumerate_triangulations,
    is_permitted, verify_shelling, Arc, ArcComplex, Face, GreedyConfig, PolygonSpec, Provenance,
    ShellingOrder, Verdict,
};

const CONVEX: std::ops::RangeInclusive<usize> = 4..=9;
const PUNCTURED: std::ops::RangeInclusive<usize> = 2..=6;

type Criterion = (&'static str, fn() -> Outcome);

struct Outcome {
    passed: bool,
    detail: String,
}

fn outcome(passed: bool, detail: impl Into<String>) -> Outcome {
    Outcome {
        passed,
        detail: detail.into(),
    }
}

/// Every coloured polygon of the sweep, up to dihedral symmetry.
fn sweep_specs() -> Vec<PolygonSpec> {
    let convex = CONVEX.flat_map(|m| {
        colourings(m, true)
            .into_iter()
            .map(move |c| PolygonSpec::new(m, false, c).unwrap())
    });
    let punctured = PUNCTURED.flat_map(|m| {
        colourings(m, true)
            .into_iter()
            .map(move |c| PolygonSpec::new(m, true, c).unwrap())
    });
    convex.chain(punctured).collect()
}

fn uncoloured_specs() -> Vec<PolygonSpec> {
    CONVEX
        .map(|m| PolygonSpec::uncoloured(m, false).unwrap())
        .chain(PUNCTURED.map(|m| PolygonSpec::uncoloured(m, true).unwrap()))
        .collect()
}

fn expected_dimension(spec: &PolygonSpec) -> isize {
    spec.m() as isize - if spec.is_punctured() { 2 } else { 4 }
}

fn dimension_and_purity() -> Outcome {
    let bad: Vec<String> = sweep_specs()
        .par_iter()
        .filter_map(|spec| {
            let c = build_complex(spec, true).unwrap();
            (!c.is_pure() || c.dimension() != expected_dimension(spec))
                .then(|| format!("{spec}: dim {} pure {}", c.dimension(), c.is_pure()))
        })
        .collect();
    let n = sweep_specs().len();
    outcome(
        bad.is_empty(),
        format!("{n} permitted complexes pure of dimension m-4 / m-2; failures: {bad:?}"),
    )
}

fn pseudomanifold() -> Outcome {
    let mut bad: Vec<String> = sweep_specs()
        .par_iter()
        .filter_map(|spec| {
            let r = build_complex(spec, true).unwrap().pseudomanifold_report();
            (!r.is_pseudomanifold()).then(|| spec.to_string())
        })
        .collect();
    for spec in uncoloured_specs() {
        let r = build_complex(&spec, false).unwrap().pseudomanifold_report();
        if !r.is_pseudomanifold() || !r.boundary_empty() {
            bad.push(format!("{spec} full"));
        }
    }
    outcome(
        bad.is_empty(),
        format!(
            "{} permitted + {} full complexes; full ones have empty boundary; failures: {bad:?}",
            sweep_specs().len(),
            uncoloured_specs().len()
        ),
    )
}

fn constructed(spec: &PolygonSpec) -> polyarc_core::shelling::ConstructedShelling {
    let cfg = GreedyConfig::default();
    if spec.is_punctured() {
        shell_coloured_punctured(spec, &cfg).unwrap()
    } else {
        shell_coloured_convex(spec, &cfg).unwrap()
    }
}

fn constructors() -> Outcome {
    let results: Vec<(String, bool, Option<String>)> = sweep_specs()
        .par_iter()
        .map(|spec| {
            let s = constructed(spec);
            let ok = verify_shelling(&s.order).unwrap().passed()
                && check_wilson_property(&s.order).unwrap().passed();
            let repair = s.repair.map(|r| {
                format!(
                    "{} failed at k={} repaired={}",
                    r.polygon, r.failed_at, r.repaired
                )
            });
            (spec.to_string(), ok, repair)
        })
        .collect();
    let bad: Vec<&String> = results.iter().filter(|r| !r.1).map(|r| &r.0).collect();
    let repairs: Vec<&String> = results.iter().filter_map(|r| r.2.as_ref()).collect();
    for r in &repairs {
        println!("    repair: {r}");
    }
    outcome(
        bad.is_empty(),
        format!(
            "{} constructed orders pass both checkers; repairs: {}; failures: {bad:?}",
            results.len(),
            repairs.len()
        ),
    )
}

/// Orders to compare the checkers on: the constructed one, a greedy one,
/// local perturbations of the constructed one and uniform random shuffles.
fn test_orders(complex: &ArcComplex, base: &ShellingOrder, seed: u64) -> Vec<Vec<Face>> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut out = vec![base.faces().to_vec()];
    if let Some(g) = greedy_shelling(
        complex,
        &GreedyConfig {
            seed,
            ..Default::default()
        },
    )
    .unwrap()
    {
        out.push(g.faces().to_vec());
    }
    let n = base.len();
    while out.len() < 60 && n > 1 {
        let mut o = base.faces().to_vec();
        let i = rng.gen_range(0..n);
        let j = rng.gen_range(0..n);
        o.swap(i, j);
        out.push(o);
    }
    while out.len() < 110 {
        let mut o = base.faces().to_vec();
        o.shuffle(&mut rng);
        out.push(o);
    }
    out
}

fn checker_equivalence() -> Outcome {
    let jobs: Vec<(PolygonSpec, bool)> = sweep_specs()
        .into_iter()
        .map(|s| (s, true))
        .chain(uncoloured_specs().into_iter().map(|s| (s, false)))
        .collect();
    let results: Vec<(usize, usize, Vec<String>)> = jobs
        .par_iter()
        .enumerate()
        .map(|(k, (spec, permitted_only))| {
            let cert = certify(spec, *permitted_only).unwrap();
            let base = cert.shelling.unwrap();
            let complex = base.complex().clone();
            let mut disagreements = Vec::new();
            let mut shellings = 0;
            let orders = test_orders(&complex, &base, k as u64);
            for faces in &orders {
                let o =
                    ShellingOrder::new(complex.clone(), faces.clone(), Provenance::User).unwrap();
                let s = verify_shelling(&o).unwrap().passed();
                let w = check_wilson_property(&o).unwrap().passed();
                if s != w {
                    disagreements.push(format!("{spec}: shelling {s} wilson {w}"));
                }
                shellings += usize::from(s);
            }
            (orders.len(), shellings, disagreements)
        })
        .collect();
    let orders: usize = results.iter().map(|r| r.0).sum();
    let shellings: usize = results.iter().map(|r| r.1).sum();
    let min = results.iter().map(|r| r.0).min().unwrap_or(0);
    let bad: Vec<&String> = results.iter().flat_map(|r| &r.2).collect();
    outcome(
        bad.is_empty() && min >= 100,
        format!(
            "{} complexes, {orders} orders (min {min} per complex, {shellings} of them shellings), disagreements: {bad:?}",
            results.len()
        ),
    )
}

fn certificates() -> Outcome {
    let mut bad = Vec::new();
    let mut balls = 0;
    let mut trivial = 0;
    for spec in sweep_specs() {
        let c = certify(&spec, true).unwrap();
        if is_nontrivial(&spec) {
            balls += 1;
            if c.verdict != Verdict::ClosedBall || c.euler_characteristic != 1 {
                bad.push(format!(
                    "{spec}: {} chi={}",
                    c.verdict, c.euler_characteristic
                ));
            }
        } else {
            // nothing rejected: the permitted complex is the full one
            trivial += 1;
            let d = c.dimension;
            if c.verdict != Verdict::Sphere || c.euler_characteristic != 1 + (-1i64).pow(d as u32) {
                bad.push(format!(
                    "{spec}: {} chi={}",
                    c.verdict, c.euler_characteristic
                ));
            }
        }
    }
    for spec in uncoloured_specs() {
        let c = certify(&spec, false).unwrap();
        let d = c.dimension;
        if c.verdict != Verdict::Sphere || c.euler_characteristic != 1 + (-1i64).pow(d as u32) {
            bad.push(format!(
                "{spec} full: {} chi={}",
                c.verdict, c.euler_characteristic
            ));
        }
    }
    outcome(
        bad.is_empty(),
        format!(
            "{balls} non-trivial colourings are balls with chi=1, {trivial} trivial ones and {} full complexes are spheres with chi=1+(-1)^d; failures: {bad:?}",
            uncoloured_specs().len()
        ),
    )
}

/// Backtracking count of maximal non-crossing sets, with crossings decided
/// by comparing the boundary pieces the arcs cut off.
fn oracle_count(m: usize, punctured: bool) -> usize {
    let mut arcs: Vec<(usize, usize)> = Vec::new();
    for i in 0..m {
        for j in 0..m {
            let ok = if punctured {
                j != (i + 1) % m
            } else {
                i + 2 <= j && !(i == 0 && j == m - 1)
            };
            if ok {
                arcs.push((i, j));
            }
        }
    }
    let piece = |(i, j): (usize, usize)| -> u64 {
        let span = if i == j { m } else { (j + m - i) % m };
        (0..span).fold(0, |acc, s| acc | 1 << ((i + s) % m))
    };
    let inside = |(i, j): (usize, usize), v: usize| {
        let span = if i == j { m } else { (j + m - i) % m };
        (1..span).any(|s| (i + s) % m == v)
    };
    let cross = |a: (usize, usize), b: (usize, usize)| match (a.0 == a.1, b.0 == b.1) {
        (true, true) => a != b,
        (true, false) => inside(b, a.0),
        (false, true) => inside(a, b.0),
        (false, false) => {
            let (x, y) = (piece(a), piece(b));
            let both = x & y;
            !(both == 0 || both == x || both == y)
        }
    };
    fn go(
        k: usize,
        chosen: &mut Vec<usize>,
        arcs: &[(usize, usize)],
        cross: &dyn Fn((usize, usize), (usize, usize)) -> bool,
    ) -> usize {
        if k == arcs.len() {
            let maximal = (0..arcs.len())
                .filter(|x| !chosen.contains(x))
                .all(|x| chosen.iter().any(|&c| cross(arcs[x], arcs[c])));
            return usize::from(maximal);
        }
        let mut total = 0;
        if chosen.iter().all(|&c| !cross(arcs[k], arcs[c])) {
            chosen.push(k);
            total += go(k + 1, chosen, arcs, cross);
            chosen.pop();
        }
        total + go(k + 1, chosen, arcs, cross)
    }
    go(0, &mut Vec::new(), &arcs, &cross)
}

fn counting() -> Outcome {
    let mut bad = Vec::new();
    let mut seen = Vec::new();
    for (m, catalan) in [(4, 2), (5, 5), (6, 14), (7, 42), (8, 132)] {
        let ours = enumerate_triangulations(&PolygonSpec::uncoloured(m, false).unwrap(), false)
            .unwrap()
            .len();
        let oracle = oracle_count(m, false);
        if ours != oracle || ours != catalan {
            bad.push(format!(
                "convex m={m}: ours {ours} oracle {oracle} expected {catalan}"
            ));
        }
        seen.push(ours.to_string());
    }
    for m in 2..=5 {
        let ours = enumerate_triangulations(&PolygonSpec::uncoloured(m, true).unwrap(), false)
            .unwrap()
            .len();
        let oracle = oracle_count(m, true);
        if ours != oracle {
            bad.push(format!("punctured m={m}: ours {ours} oracle {oracle}"));
        }
        seen.push(ours.to_string());
    }
    outcome(
        bad.is_empty(),
        format!(
            "counts convex 4..8 then punctured 2..5: {}; failures: {bad:?}",
            seen.join(" ")
        ),
    )
}

fn unique_loop() -> Outcome {
    let mut bad = Vec::new();
    let mut checked = 0;
    for m in PUNCTURED {
        for c in colourings(m, true) {
            let spec = PolygonSpec::new(m, true, c).unwrap();
            for permitted_only in [false, true] {
                for t in enumerate_triangulations(&spec, permitted_only).unwrap() {
                    checked += 1;
                    let loops: Vec<Arc> =
                        t.arcs().iter().copied().filter(|a| a.is_loop()).collect();
                    let blue_ok =
                        !permitted_only || loops.iter().all(|l| spec.is_blue(l.endpoints().0));
                    if loops.len() != 1 || !blue_ok {
                        bad.push(format!("{spec}: {t}"));
                    }
                }
            }
        }
    }
    outcome(bad.is_empty(), format!("{checked} punctured triangulations each hold one loop, permitted ones at blue vertices; failures: {bad:?}"))
}

fn bridge() -> Outcome {
    let mut bad = Vec::new();
    let cases = [(3, false), (4, false), (2, true), (3, true)];
    for (n, punctured) in cases {
        let p = DecoratedPolygon::new(n, punctured).unwrap();
        let report = verify_isomorphism(&p).unwrap();
        let c = certify(&to_bicoloured(&p), true).unwrap();
        let d = if punctured { 2 * n - 2 } else { 2 * n - 4 } as isize;
        if !report.isomorphic || c.verdict != Verdict::ClosedBall || c.dimension != d {
            bad.push(format!(
                "{p}: iso {} {} d={}",
                report.isomorphic, c.verdict, c.dimension
            ));
        }
    }
    outcome(bad.is_empty(), format!("plain n=3,4 and punctured n=2,3: isomorphic closed balls of dimension 2n-4 / 2n-2; failures: {bad:?}"))
}

fn figures() -> Outcome {
    let square: PolygonSpec = "P:m=4;punctured=1;colours=BRBR".parse().unwrap();
    let loops: Vec<Arc> = enumerate_arcs(&square, true)
        .into_iter()
        .filter(|a| a.is_loop() && is_permitted(&square, *a))
        .collect();
    let order = constructed(&square).order;
    let table = order.complex().table();
    let mut blocks: Vec<Arc> = order
        .faces()
        .iter()
        .map(|&f| table.arcs_of(f).into_iter().find(|a| a.is_loop()).unwrap())
        .collect();
    blocks.dedup();
    let stars_ok = blocks.len() == 2 && blocks.iter().all(|l| loops.contains(l));
    let hexagon = certify(&"P:m=6;punctured=0;colours=BRBRBR".parse().unwrap(), true).unwrap();
    let hex_ok = hexagon.verdict == Verdict::ClosedBall && hexagon.dimension == 2;
    outcome(
        loops.len() == 2 && stars_ok && hex_ok,
        format!(
            "alternate punctured square: {} permitted loops, constructed order in contiguous stars {:?}; alternate hexagon: {} of dimension {}",
            loops.len(),
            blocks.iter().map(Arc::to_string).collect::<Vec<_>>(),
            hexagon.verdict,
            hexagon.dimension
        ),
    )
}

fn run_cli(args: &[&str], stdin: Option<&str>) -> (Vec<u8>, Option<i32>) {
    let mut child = Command::new(env!("CARGO_BIN_EXE_polyarc"))
        .args(args)
        .env_remove("POLYARC_BUDGET")
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .stderr(Stdio::piped())
        .spawn()
        .expect("binary runs");
    if let Some(input) = stdin {
        child
            .stdin
            .take()
            .unwrap()
            .write_all(input.as_bytes())
            .unwrap();
    }
    drop(child.stdin.take());
    let out = child.wait_with_output().unwrap();
    let mut bytes = out.stdout;
    bytes.extend_from_slice(b"\n--stderr--\n");
    bytes.extend_from_slice(&out.stderr);
    (bytes, out.status.code())
}

fn cli_determinism() -> Outcome {
    let hex = "P:m=6;punctured=0;colours=BRBRBR";
    let sq = "P:m=4;punctured=1;colours=BRBR";
    let (order, _) = run_cli(&["shell", hex], None);
    let order = String::from_utf8(order).unwrap();
    let order = order.split("\n--stderr--\n").next().unwrap().to_string();
    let cases: Vec<(Vec<&str>, Option<&str>)> = vec![
        (vec!["arcs", hex], None),
        (vec!["arcs", sq, "--full", "--format", "json"], None),
        (vec!["triangulations", sq], None),
        (vec!["complex", hex], None),
        (vec!["complex", sq, "--faces"], None),
        (vec!["boundary", hex], None),
        (vec!["flipgraph", sq], None),
        (vec!["shell", sq], None),
        (
            vec![
                "shell",
                "P:m=3;punctured=1;colours=BBB",
                "--full",
                "--seed",
                "3",
            ],
            None,
        ),
        (vec!["check-shelling", hex, "-"], Some(order.as_str())),
        (vec!["certify", hex], None),
        (vec!["certify", sq, "--format", "json"], None),
        (vec!["bridge", "H:n=3;punctured=0"], None),
        (vec!["render", sq], None),
        (vec!["render", hex, "-t", "D(0,2)"], None),
        (
            vec!["sweep", "--convex", "4..6", "--punctured", "2..4"],
            None,
        ),
    ];
    let mut bad = Vec::new();
    for (args, stdin) in &cases {
        let first = run_cli(args, *stdin);
        let second = run_cli(args, *stdin);
        if first != second || first.1 != Some(0) {
            bad.push(format!("{args:?} status {:?}", first.1));
        }
    }
    outcome(
        bad.is_empty(),
        format!(
            "{} invocations covering every subcommand repeat byte for byte; failures: {bad:?}",
            cases.len()
        ),
    )
}

fn main() {
    // `cargo test -- <filter>` passes extra arguments; this binary ignores them
    let criteria: [Criterion; 10] = [
        ("dimension and purity", dimension_and_purity),
        ("pseudo-manifold", pseudomanifold),
        ("shelling constructors", constructors),
        ("checker equivalence", checker_equivalence),
        ("ball and sphere certificates", certificates),
        ("counting oracles", counting),
        ("unique loop", unique_loop),
        ("decorated bridge", bridge),
        ("figure-scale reproduction", figures),
        ("cli determinism", cli_determinism),
    ];
    let mut failed = 0;
    for (k, (name, check)) in criteria.iter().enumerate() {
        let start = Instant::now();
        let o = check();
        println!(
            "criterion {:>2} {}: {} — {} ({:.1}s)",
            k + 1,
            if o.passed { "PASS" } else { "FAIL" },
            name,
            o.detail,
            start.elapsed().as_secs_f64()
        );
        failed += usize::from(!o.passed);
    }
    println!(
        "acceptance: {} of {} criteria passed",
        criteria.len() - failed,
        criteria.len()
    );
    if failed > 0 {
        std::process::exit(1);
    }
}
