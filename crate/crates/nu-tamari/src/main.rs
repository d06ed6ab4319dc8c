use std::io::Write;
use std::path::PathBuf;
use std::process::ExitCode;
use std::time::Instant;

use anyhow::{bail, Context, Result};
use clap::{Args, Parser, Subcommand, ValueEnum};

use nu_tamari::json::{self, AssoJson, ComplexJson, PolyJson, PosetJson, ReportJson, TamariJson};
use nu_tamari::{dot, poset_file, random, sweep};
use nu_tamari_core::complexes::{enumerate_asso_faces, enumerate_tc_faces};
use nu_tamari_core::paths::{degree, tamari_lattice, FerrersRegion, NuPath};
use nu_tamari_core::posets::{
    atom_perspectivity_marking, multivalley_marking, poset_f_triangle, poset_h_triangle,
    rotation_marking, tamari_unmarked, verify_poset_fh, LabeledPoset,
};
use nu_tamari_core::trees::CompatibilityGraph;
use nu_tamari_core::triangles::{
    f_triangle, h_triangle, verify_fh_with, TriangleReport, VerifyOptions,
};

/// Exact ν-Tamari lattices, ν-associahedra and their F- and H-triangles.
#[derive(Parser)]
#[command(name = "nu-tamari", version)]
struct Cli {
    /// Worker threads for sweeps (default: $NU_TAMARI_THREADS, then all cores).
    #[arg(long, global = true)]
    threads: Option<usize>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Print deg(ν) and the F- and H-triangles.
    Triangles {
        #[arg(long)]
        nu: NuPath,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
    /// Check every identity between the triangles and the face counts.
    Verify(VerifyArgs),
    /// Write the Tamari lattice, the associahedron or the Tamari complex.
    Export {
        #[arg(long)]
        nu: NuPath,
        #[arg(long, value_enum)]
        what: Exported,
        #[arg(long, value_enum, default_value_t = Format::Dot)]
        format: Format,
        /// Output file (default: stdout).
        #[arg(long, short)]
        output: Option<PathBuf>,
    },
    /// Triangles and F/H check for a labeled poset read from a file or generated at random.
    Poset(PosetArgs),
    /// Build a marking of Tam(ν) and report its triangles.
    Marking {
        #[arg(long)]
        nu: NuPath,
        #[arg(long, value_enum)]
        kind: MarkingKind,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
}

#[derive(Args)]
struct VerifyArgs {
    #[arg(long, conflicts_with = "sweep", required_unless_present = "sweep")]
    nu: Option<NuPath>,
    /// Check every ν with 1 ≤ |ν| ≤ LEN.
    #[arg(long, value_name = "LEN")]
    sweep: Option<usize>,
    /// Allow sweeps beyond the cap.
    #[arg(long)]
    force: bool,
    /// Largest sweep length allowed without --force.
    #[arg(long, default_value_t = 10)]
    cap: usize,
    #[arg(long, value_enum, default_value_t = Format::Text)]
    format: Format,
    /// Perturb H before checking (exercises the failure path).
    #[arg(long, hide = true)]
    corrupt: bool,
}

#[derive(Args)]
struct PosetArgs {
    /// Poset JSON file: {"elements": [...], "covers": [[lower, upper, label], ...], "k": K}.
    #[arg(long, conflicts_with = "fuzz", required_unless_present = "fuzz")]
    input: Option<PathBuf>,
    /// Accept any order relations and keep only the covers.
    #[arg(long, requires = "input")]
    reduce: bool,
    /// Check the F/H correspondence.
    #[arg(long)]
    verify: bool,
    /// Print the triangles.
    #[arg(long)]
    triangles: bool,
    /// Check this many random posets instead of reading a file.
    #[arg(long, value_name = "COUNT")]
    fuzz: Option<u64>,
    #[arg(long, default_value_t = 42, requires = "fuzz")]
    seed: u64,
    #[arg(long, value_enum, default_value_t = Format::Text)]
    format: Format,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
    Dot,
}

#[derive(Clone, Copy, ValueEnum)]
enum Exported {
    Tamari,
    Asso,
    Tc,
}

#[derive(Clone, Copy, ValueEnum)]
enum MarkingKind {
    Rotation,
    AtomPerspectivity,
    Multivalley,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::FAILURE,
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(2)
        }
    }
}

/// Returns whether every requested check passed.
fn run(cli: Cli) -> Result<bool> {
    let mut out = std::io::stdout().lock();
    match cli.command {
        Command::Triangles { nu, format } => {
            let (f, h, deg) = (f_triangle(&nu), h_triangle(&nu), degree(&nu));
            match format {
                Format::Text => writeln!(out, "deg = {deg}\nF = {f}\nH = {h}")?,
                Format::Json => {
                    let doc = serde_json::json!({
                        "nu": nu.to_string(),
                        "deg": deg,
                        "F": PolyJson::from(&f),
                        "H": PolyJson::from(&h),
                    });
                    writeln!(out, "{}", json::to_string_pretty(&doc))?
                }
                Format::Dot => bail!("triangles has no DOT form"),
            }
            Ok(true)
        }
        Command::Verify(args) => verify(args, cli.threads, &mut out),
        Command::Export {
            nu,
            what,
            format,
            output,
        } => {
            let text = export(&nu, what, format)?;
            match output {
                Some(path) => std::fs::write(&path, text)
                    .with_context(|| format!("writing {}", path.display()))?,
                None => out.write_all(text.as_bytes())?,
            }
            Ok(true)
        }
        Command::Poset(args) => poset(args, cli.threads, &mut out),
        Command::Marking { nu, kind, format } => marking(&nu, kind, format, &mut out),
    }
}

fn failed_checks(r: &TriangleReport) -> Vec<&'static str> {
    [
        ("fh", r.fh_holds),
        ("inverse", r.inverse_holds),
        ("path_sum", r.path_sum_holds),
        ("tree_sum", r.tree_sum_holds),
        ("schroder", r.schroder_holds),
        ("fvector", r.fvector_holds),
        ("hvector", r.hvector_holds),
        ("duality", r.duality_holds),
        ("reciprocity", r.reciprocity_holds),
    ]
    .into_iter()
    .filter(|(_, ok)| !ok)
    .map(|(name, _)| name)
    .collect()
}

fn verify(args: VerifyArgs, threads: Option<usize>, out: &mut impl Write) -> Result<bool> {
    let words = match (&args.nu, args.sweep) {
        (Some(nu), _) => vec![nu.clone()],
        (None, Some(len)) => {
            if len > args.cap && !args.force {
                bail!(
                    "sweep length {len} exceeds the cap of {}; pass --force to run it anyway",
                    args.cap
                );
            }
            sweep::words_up_to(len)
        }
        (None, None) => unreachable!("clap requires one input"),
    };
    let opts = VerifyOptions {
        corrupt: args.corrupt,
        ..Default::default()
    };
    let results = sweep::run(&words, threads, |nu| {
        let start = Instant::now();
        let report = verify_fh_with(nu, opts);
        (report, start.elapsed())
    });
    let mut all = true;
    for (report, elapsed) in &results {
        all &= report.all_hold();
        match args.format {
            Format::Json => writeln!(out, "{}", serde_json::to_string(&ReportJson::from(report))?)?,
            _ => {
                let failed = failed_checks(report);
                let status = if failed.is_empty() {
                    "ok".to_string()
                } else {
                    format!("FAIL {}", failed.join(","))
                };
                writeln!(
                    out,
                    "{status:<6} {} deg={} {:.3}ms",
                    report.nu,
                    report.deg,
                    elapsed.as_secs_f64() * 1e3
                )?;
            }
        }
    }
    if args.format != Format::Json {
        let passed = results.iter().filter(|(r, _)| r.all_hold()).count();
        writeln!(out, "{passed}/{} passed", results.len())?;
    }
    Ok(all)
}

fn export(nu: &NuPath, what: Exported, format: Format) -> Result<String> {
    Ok(match (what, format) {
        (Exported::Tamari, Format::Dot) => dot::tamari(&tamari_lattice(nu)),
        (Exported::Tamari, Format::Json) => {
            json::to_string_pretty(&TamariJson::from(&tamari_lattice(nu))) + "\n"
        }
        (Exported::Asso, Format::Dot) => dot::asso(&nu.to_string(), &enumerate_asso_faces(nu)),
        (Exported::Asso, Format::Json) => {
            json::to_string_pretty(&AssoJson::new(nu, degree(nu), &enumerate_asso_faces(nu))) + "\n"
        }
        (Exported::Tc, Format::Dot) => dot::complex(&CompatibilityGraph::new(std::sync::Arc::new(
            FerrersRegion::new(nu),
        ))),
        (Exported::Tc, Format::Json) => {
            json::to_string_pretty(&ComplexJson::new(nu, &enumerate_tc_faces(nu))) + "\n"
        }
        (_, Format::Text) => bail!("export supports --format dot or json"),
    })
}

fn describe_poset(
    p: &LabeledPoset,
    format: Format,
    triangles: bool,
    out: &mut impl Write,
) -> Result<bool> {
    let holds = verify_poset_fh(p);
    match format {
        Format::Text => {
            writeln!(
                out,
                "elements = {}, covers = {}, marked = {}, k = {}, deg = {}",
                p.len(),
                p.covers().len(),
                p.marked_count(),
                p.k(),
                p.degree()
            )?;
            if triangles {
                writeln!(
                    out,
                    "H = {}\nF = {}",
                    poset_h_triangle(p),
                    poset_f_triangle(p)
                )?;
            }
            writeln!(
                out,
                "F/H correspondence: {}",
                if holds { "holds" } else { "FAILS" }
            )?;
        }
        Format::Json => {
            let doc = serde_json::json!({
                "poset": PosetJson::from(p),
                "deg": p.degree(),
                "marked": p.marked_count(),
                "H": PolyJson::from(&poset_h_triangle(p)),
                "F": PolyJson::from(&poset_f_triangle(p)),
                "fh": holds,
            });
            writeln!(out, "{}", json::to_string_pretty(&doc))?;
        }
        Format::Dot => out.write_all(dot::poset(p).as_bytes())?,
    }
    Ok(holds)
}

fn poset(args: PosetArgs, threads: Option<usize>, out: &mut impl Write) -> Result<bool> {
    if let Some(count) = args.fuzz {
        let seed = args.seed;
        let mut pool = rayon::ThreadPoolBuilder::new();
        if let Some(n) = sweep::thread_count(threads) {
            pool = pool.num_threads(n);
        }
        let results: Vec<(usize, usize, bool)> = pool.build()?.install(|| {
            use rayon::prelude::*;
            (0..count)
                .into_par_iter()
                .map(|i| {
                    let p = random::fuzz_case(seed, i);
                    (p.len(), p.covers().len(), verify_poset_fh(&p))
                })
                .collect()
        });
        for (i, &(n, c, ok)) in results.iter().enumerate() {
            if !ok {
                writeln!(out, "FAIL case {i}: {n} elements, {c} covers")?;
            }
        }
        let passed = results.iter().filter(|r| r.2).count();
        writeln!(
            out,
            "{passed}/{count} random posets satisfy the F/H correspondence (seed {seed})"
        )?;
        return Ok(passed as u64 == count);
    }
    let path = args.input.expect("clap requires one input");
    let p = poset_file::load_poset(&path, args.reduce)
        .with_context(|| format!("loading {}", path.display()))?;
    let holds = describe_poset(&p, args.format, args.triangles || !args.verify, out)?;
    Ok(holds || !args.verify)
}

fn marking(nu: &NuPath, kind: MarkingKind, format: Format, out: &mut impl Write) -> Result<bool> {
    let p = match kind {
        MarkingKind::Rotation => rotation_marking(nu),
        MarkingKind::Multivalley => multivalley_marking(nu),
        MarkingKind::AtomPerspectivity => atom_perspectivity_marking(&tamari_unmarked(nu))?,
    };
    let holds = describe_poset(&p, format, true, out)?;
    if format == Format::Text {
        let h = poset_h_triangle(&p).identify_y_variables();
        let agrees = h == h_triangle(nu);
        writeln!(out, "H with y-variables identified equals H_nu: {agrees}")?;
    }
    Ok(holds)
}
