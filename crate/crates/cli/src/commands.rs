use std::fmt::Write as _;
use std::io::Read;
use std::ops::RangeInclusive;

use rayon::prelude::*;
use serde_json::{json, Value};

use polyarc_core::bridge::{
    enumerate_decorated_arcs, to_bicoloured, translate_arc, translate_back, verify_isomorphism,
    DecoratedArc, DecoratedPolygon,
};
use polyarc_core::shelling::{certify_with, parse_order};
use polyarc_core::sweep::{format_row, sweep_jobs, sweep_row, SweepRow, TABLE_HEADER};
use polyarc_core::{
    build_complex, check_wilson_property, enumerate_arcs, enumerate_triangulations,
    extend_to_triangulation, greedy_shelling, is_permitted, verify_shelling, Arc, ArcComplex,
    Error, GreedyConfig, PolygonSpec, Verdict,
};

use crate::{render, Command, Format, Global};

/// What a command produced and the exit status it asks for.
pub struct Outcome {
    pub output: String,
    pub status: u8,
}

impl Outcome {
    fn ok(output: String) -> Self {
        Outcome { output, status: 0 }
    }

    fn with_status(output: String, failed: bool) -> Self {
        Outcome {
            output,
            status: u8::from(failed),
        }
    }
}

/// Anything that ends in status 2: bad arguments, unreadable files, specs or
/// arcs the library rejects.
#[derive(Debug)]
pub struct InputError(String);

impl std::fmt::Display for InputError {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(&self.0)
    }
}

impl From<Error> for InputError {
    fn from(e: Error) -> Self {
        InputError(e.to_string())
    }
}

type Result<T> = std::result::Result<T, InputError>;

fn json_text(v: &Value) -> String {
    let mut s = serde_json::to_string_pretty(v).expect("json values serialise");
    s.push('\n');
    s
}

fn parse_spec(s: &str) -> Result<PolygonSpec> {
    Ok(s.parse()?)
}

fn config(g: &Global) -> GreedyConfig {
    GreedyConfig {
        budget: g.budget,
        seed: g.seed,
    }
}

fn complex_name(permitted_only: bool) -> &'static str {
    if permitted_only {
        "permitted"
    } else {
        "full"
    }
}

pub fn run(command: &Command, g: &Global) -> Result<Outcome> {
    match command {
        Command::Arcs { spec, which } => arcs(&parse_spec(spec)?, which.permitted_only(), g),
        Command::Triangulations { spec, which } => {
            triangulations(&parse_spec(spec)?, which.permitted_only(), g)
        }
        Command::Complex { spec, which, faces } => {
            complex(&parse_spec(spec)?, which.permitted_only(), *faces, g)
        }
        Command::Boundary { spec, which } => {
            boundary(&parse_spec(spec)?, which.permitted_only(), g)
        }
        Command::Flipgraph { spec, which } => {
            let c = build_complex(&parse_spec(spec)?, which.permitted_only())?;
            Ok(Outcome::ok(c.dual_graph_dot()?))
        }
        Command::Shell {
            spec,
            which,
            greedy,
        } => shell(&parse_spec(spec)?, which.permitted_only(), *greedy, g),
        Command::CheckShelling { spec, order, which } => {
            let text = if order.as_os_str() == "-" {
                let mut s = String::new();
                std::io::stdin()
                    .read_to_string(&mut s)
                    .map_err(|e| InputError(format!("cannot read stdin: {e}")))?;
                s
            } else {
                std::fs::read_to_string(order)
                    .map_err(|e| InputError(format!("cannot read {}: {e}", order.display())))?
            };
            check_shelling(&parse_spec(spec)?, which.permitted_only(), &text, g)
        }
        Command::Certify { spec, which } => certify(&parse_spec(spec)?, which.permitted_only(), g),
        Command::Bridge { spec, arcs } => bridge(&spec.parse()?, arcs, g),
        Command::Render {
            spec,
            triangulation,
            which,
        } => {
            let spec = parse_spec(spec)?;
            let partial = triangulation
                .split_whitespace()
                .map(str::parse)
                .collect::<std::result::Result<Vec<Arc>, _>>()?;
            let t = extend_to_triangulation(&spec, &partial, which.permitted_only())?;
            Ok(Outcome::ok(render::svg(&t)))
        }
        Command::Sweep {
            convex,
            punctured,
            all_colourings,
        } => sweep(convex.as_deref(), punctured.as_deref(), !all_colourings, g),
    }
}

fn arcs(spec: &PolygonSpec, permitted_only: bool, g: &Global) -> Result<Outcome> {
    if permitted_only && !spec.has_blue() {
        return Err(InputError("no blue vertex, so no permitted arcs".into()));
    }
    let arcs = enumerate_arcs(spec, permitted_only);
    Ok(Outcome::ok(match g.format {
        Format::Text => {
            let mut out = String::new();
            for a in &arcs {
                let tag = if is_permitted(spec, *a) {
                    "permitted"
                } else {
                    "rejected"
                };
                writeln!(out, "{a} {tag}").unwrap();
            }
            out
        }
        Format::Json => json_text(&json!({
            "polygon": spec.to_string(),
            "complex": complex_name(permitted_only),
            "arcs": arcs.iter().map(|a| json!({
                "arc": a.to_string(),
                "permitted": is_permitted(spec, *a),
            })).collect::<Vec<_>>(),
        })),
    }))
}

fn triangulations(spec: &PolygonSpec, permitted_only: bool, g: &Global) -> Result<Outcome> {
    let ts = enumerate_triangulations(spec, permitted_only)?;
    Ok(Outcome::ok(match g.format {
        Format::Text => {
            let mut out = String::new();
            for t in &ts {
                writeln!(out, "{t}").unwrap();
            }
            writeln!(out, "# {} triangulations", ts.len()).unwrap();
            out
        }
        Format::Json => json_text(&json!({
            "polygon": spec.to_string(),
            "complex": complex_name(permitted_only),
            "count": ts.len(),
            "triangulations": ts.iter()
                .map(|t| t.arcs().iter().map(Arc::to_string).collect::<Vec<_>>())
                .collect::<Vec<_>>(),
        })),
    }))
}

fn complex(spec: &PolygonSpec, permitted_only: bool, faces: bool, g: &Global) -> Result<Outcome> {
    let c = build_complex(spec, permitted_only)?;
    if faces {
        return Ok(Outcome::ok(match g.format {
            Format::Text => c.to_text(),
            Format::Json => {
                json_text(&serde_json::to_value(c.to_document()).expect("serialisable"))
            }
        }));
    }
    let pm = c.pseudomanifold_report();
    let stats = c.flip_graph_stats().ok();
    let f = c.f_vector();
    let chi = c.euler_characteristic();
    Ok(Outcome::ok(match g.format {
        Format::Text => {
            let mut out = String::new();
            let mut line = |k: &str, v: String| writeln!(out, "{k}: {v}").unwrap();
            line("polygon", spec.to_string());
            line("complex", complex_name(permitted_only).into());
            line("dimension", c.dimension().to_string());
            line("maximal faces", c.len().to_string());
            line("vertices", c.vertices().len().to_string());
            line(
                "f-vector",
                f.iter().map(usize::to_string).collect::<Vec<_>>().join(" "),
            );
            line("euler characteristic", chi.to_string());
            line("pure", pm.pure.to_string());
            line("strongly connected", pm.strongly_connected.to_string());
            line("pseudo-manifold", pm.is_pseudomanifold().to_string());
            line("interior codim-1 faces", pm.interior_faces.to_string());
            line("boundary codim-1 faces", pm.boundary_faces.to_string());
            if let Some(v) = pm.violation {
                line("violation", c.format_face(v));
            }
            if let Some(s) = stats {
                line("flip graph edges", s.edges.to_string());
                line(
                    "flip graph diameter",
                    s.diameter
                        .map_or_else(|| "disconnected".into(), |d| d.to_string()),
                );
            }
            out
        }
        Format::Json => json_text(&json!({
            "polygon": spec.to_string(),
            "complex": complex_name(permitted_only),
            "dimension": c.dimension(),
            "maximal_faces": c.len(),
            "vertices": c.vertices().len(),
            "f_vector": f,
            "euler_characteristic": chi,
            "pure": pm.pure,
            "strongly_connected": pm.strongly_connected,
            "pseudomanifold": pm.is_pseudomanifold(),
            "interior_faces": pm.interior_faces,
            "boundary_faces": pm.boundary_faces,
            "violation": pm.violation.map(|v| c.format_face(v)),
            "flip_graph": stats,
        })),
    }))
}

fn boundary(spec: &PolygonSpec, permitted_only: bool, g: &Global) -> Result<Outcome> {
    let c = build_complex(spec, permitted_only)?;
    let (ok, witness) = c.is_pseudomanifold_with_boundary();
    if !ok {
        let w = witness.map_or_else(
            || "complex is not pure or not strongly connected".into(),
            |f| {
                format!(
                    "codim-1 face in more than two maximal faces: {}",
                    c.format_face(f)
                )
            },
        );
        return Ok(Outcome::with_status(
            format!("not a pseudo-manifold\nwitness: {w}\n"),
            true,
        ));
    }
    let b = c.boundary_complex()?;
    Ok(Outcome::ok(match g.format {
        Format::Text => b.to_text(),
        Format::Json => json_text(&serde_json::to_value(b.to_document()).expect("serialisable")),
    }))
}

fn shell(spec: &PolygonSpec, permitted_only: bool, greedy: bool, g: &Global) -> Result<Outcome> {
    eprintln!("polyarc: seed {} budget {}", g.seed, g.budget);
    let order = if greedy {
        greedy_shelling(&build_complex(spec, permitted_only)?, &config(g))?
    } else {
        let cert = certify_with(spec, permitted_only, &config(g))?;
        if let Some(r) = &cert.repair {
            eprintln!(
                "polyarc: constructed order for {} failed at k={}; repaired: {}",
                r.polygon, r.failed_at, r.repaired
            );
        }
        cert.shelling
    };
    let Some(order) = order else {
        return Ok(Outcome::with_status(
            format!("no shelling found within a budget of {} nodes\n", g.budget),
            true,
        ));
    };
    Ok(Outcome::ok(match g.format {
        Format::Text => order.to_text(),
        Format::Json => {
            json_text(&serde_json::to_value(order.to_document()).expect("serialisable"))
        }
    }))
}

fn check_shelling(
    spec: &PolygonSpec,
    permitted_only: bool,
    text: &str,
    g: &Global,
) -> Result<Outcome> {
    let order = parse_order(spec, permitted_only, text)?;
    let s = verify_shelling(&order)?;
    let w = check_wilson_property(&order)?;
    let complex: &ArcComplex = order.complex();
    let face = |k: usize| complex.format_face(order.faces()[k - 1]);
    let failed = !s.passed() || !w.passed();
    Ok(Outcome::with_status(
        match g.format {
            Format::Text => {
                let mut out = String::new();
                writeln!(out, "faces: {}", order.len()).unwrap();
                match s.failure {
                    None => writeln!(out, "shelling: pass").unwrap(),
                    Some(k) => {
                        writeln!(out, "shelling: fail at k={k}").unwrap();
                        writeln!(out, "witness: C_{k} = {}", face(k)).unwrap();
                    }
                }
                match w.failure {
                    None => writeln!(out, "wilson: pass").unwrap(),
                    Some((i, j)) => {
                        writeln!(out, "wilson: fail at i={i} j={j}").unwrap();
                        writeln!(out, "witness: C_{i} = {}", face(i)).unwrap();
                        writeln!(out, "witness: C_{j} = {}", face(j)).unwrap();
                    }
                }
                out
            }
            Format::Json => json_text(&json!({
                "polygon": spec.to_string(),
                "complex": complex_name(permitted_only),
                "faces": order.len(),
                "shelling": { "passed": s.passed(), "failed_at": s.failure,
                              "witness": s.failure.map(face) },
                "wilson": { "passed": w.passed(), "failed_at": w.failure,
                            "witness": w.failure.map(|(i, j)| [face(i), face(j)]) },
            })),
        },
        failed,
    ))
}

fn certify(spec: &PolygonSpec, permitted_only: bool, g: &Global) -> Result<Outcome> {
    eprintln!("polyarc: seed {} budget {}", g.seed, g.budget);
    let cert = certify_with(spec, permitted_only, &config(g))?;
    let failed = cert.verdict == Verdict::Inconclusive;
    Ok(Outcome::with_status(
        match g.format {
            Format::Text => cert.report(),
            Format::Json => {
                json_text(&serde_json::to_value(cert.to_document()).expect("serialisable"))
            }
        },
        failed,
    ))
}

fn bridge(p: &DecoratedPolygon, requested: &[String], g: &Global) -> Result<Outcome> {
    let coloured = to_bicoloured(p);
    let mut pairs: Vec<(String, String)> = Vec::new();
    if requested.is_empty() {
        for a in enumerate_decorated_arcs(p) {
            pairs.push((a.to_string(), translate_arc(p, a)?.to_string()));
        }
    } else {
        for s in requested {
            let s = s.trim();
            if s.starts_with('E') || s.starts_with('V') {
                let a: DecoratedArc = s.parse()?;
                pairs.push((a.to_string(), translate_arc(p, a)?.to_string()));
            } else {
                let arc: Arc = s.parse()?;
                pairs.push((translate_back(p, arc)?.to_string(), arc.to_string()));
            }
        }
    }
    let report = verify_isomorphism(p)?;
    let cert = certify_with(&coloured, true, &config(g))?;
    let failed = !report.isomorphic || cert.verdict != Verdict::ClosedBall;
    Ok(Outcome::with_status(
        match g.format {
            Format::Text => {
                let mut out = String::new();
                writeln!(out, "decorated: {p}").unwrap();
                writeln!(out, "coloured: {coloured}").unwrap();
                for (d, e) in &pairs {
                    writeln!(out, "{d} -> {e}").unwrap();
                }
                writeln!(
                    out,
                    "vertices: {} decorated, {} coloured",
                    report.decorated_vertices, report.coloured_vertices
                )
                .unwrap();
                writeln!(
                    out,
                    "maximal faces: {} decorated, {} coloured",
                    report.decorated_faces, report.coloured_faces
                )
                .unwrap();
                writeln!(out, "dimension: {}", report.dimension).unwrap();
                writeln!(out, "isomorphic: {}", report.isomorphic).unwrap();
                writeln!(out, "verdict: {}", cert.verdict).unwrap();
                out
            }
            Format::Json => json_text(&json!({
                "decorated": p.to_string(),
                "coloured": coloured.to_string(),
                "translations": pairs.iter().map(|(d, e)| json!({"decorated": d, "coloured": e})).collect::<Vec<_>>(),
                "isomorphism": report,
                "verdict": cert.verdict,
            })),
        },
        failed,
    ))
}

/// `a..b` and `a..=b` are both inclusive; a single number is a one-element range.
pub fn parse_range(s: &str) -> Result<RangeInclusive<usize>> {
    let bad = || InputError(format!("bad range {s:?}; expected e.g. 4..8"));
    let num = |t: &str| t.trim().parse::<usize>().map_err(|_| bad());
    let r = match s.split_once("..") {
        Some((a, b)) => num(a)?..=num(b.strip_prefix('=').unwrap_or(b))?,
        None => num(s)?..=num(s)?,
    };
    if r.is_empty() {
        return Err(bad());
    }
    Ok(r)
}

fn sweep(
    convex: Option<&str>,
    punctured: Option<&str>,
    up_to_symmetry: bool,
    g: &Global,
) -> Result<Outcome> {
    if convex.is_none() && punctured.is_none() {
        return Err(InputError("sweep needs --convex and/or --punctured".into()));
    }
    let mut jobs = Vec::new();
    if let Some(r) = convex {
        jobs.extend(sweep_jobs(false, parse_range(r)?, up_to_symmetry)?);
    }
    if let Some(r) = punctured {
        jobs.extend(sweep_jobs(true, parse_range(r)?, up_to_symmetry)?);
    }
    let cfg = config(g);
    // collect keeps job order, whatever order the rows finish in
    let rows: Vec<SweepRow> = jobs
        .par_iter()
        .map(|(spec, permitted_only)| sweep_row(spec, *permitted_only, &cfg))
        .collect::<std::result::Result<_, _>>()?;
    let disagreements: Vec<&SweepRow> = rows.iter().filter(|r| !r.agrees()).collect();
    let repairs = rows.iter().filter(|r| r.repaired).count();
    let output = match g.format {
        Format::Text => {
            let mut out = String::new();
            writeln!(
                out,
                "# seed={} budget={} colourings={}",
                g.seed,
                g.budget,
                if up_to_symmetry {
                    "up-to-symmetry"
                } else {
                    "all"
                }
            )
            .unwrap();
            writeln!(out, "{TABLE_HEADER}").unwrap();
            for r in &rows {
                writeln!(out, "{}", format_row(r)).unwrap();
            }
            writeln!(
                out,
                "# rows={} disagreements={} repairs={}",
                rows.len(),
                disagreements.len(),
                repairs
            )
            .unwrap();
            for r in &disagreements {
                writeln!(
                    out,
                    "# witness: {} {} gave {}, expected {}",
                    r.polygon,
                    complex_name(r.permitted_only),
                    r.verdict,
                    r.expected
                )
                .unwrap();
            }
            out
        }
        Format::Json => json_text(&json!({
            "seed": g.seed,
            "budget": g.budget,
            "up_to_symmetry": up_to_symmetry,
            "rows": rows,
            "disagreements": disagreements.len(),
            "repairs": repairs,
        })),
    };
    Ok(Outcome::with_status(output, !disagreements.is_empty()))
}
