use std::io::{self, Read, Write};
use std::path::PathBuf;
use std::process::ExitCode;

use anyhow::{anyhow, bail, Context, Result};
use clap::{Args, Parser, Subcommand, ValueEnum};
use num_bigint::BigInt;
use serde_json::json;

use polygap::bounds::{
    self, BoundResult, FeasibilityVerdict, QueryRecord, TableRow, Verdict, VertexOutcome,
};
use polygap::combinatorics::phi;
use polygap::geometry::{hull_facets, realize, PointConfiguration};
use polygap::lattice::enumerate_lattice;
use polygap::{verify, CombinatorialPolytope, Family};

#[derive(Parser)]
#[command(name = "polygap", version, about = "Edge counts of polytopes with few vertices")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Args, Clone, Copy)]
struct Format {
    /// Emit JSON instead of text
    #[arg(long, global = true, conflicts_with = "csv")]
    json: bool,
    /// Emit CSV instead of text (tabular commands only)
    #[arg(long, global = true)]
    csv: bool,
}

#[derive(Args)]
struct FamilyArgs {
    /// Family name (simplex, prism, triplex, pentasm, delta_sum, sigma3, cyclic, stacked)
    /// or a full tag such as `pyr^2(delta_sum(2,3))`
    family: String,
    #[arg(long)]
    dim: Option<usize>,
    /// Triplex: number of pyramid steps plus one
    #[arg(long)]
    k: Option<usize>,
    /// Triplex: dimension of the prism part
    #[arg(long)]
    j: Option<usize>,
    #[arg(long)]
    r: Option<usize>,
    #[arg(long)]
    s: Option<usize>,
    /// Vertex count for cyclic and stacked polytopes
    #[arg(long)]
    verts: Option<usize>,
    /// Take the pyramid this many times
    #[arg(long, default_value_t = 0)]
    pyr: usize,
}

#[derive(Args)]
struct VD {
    #[arg(long)]
    v: usize,
    #[arg(long)]
    d: usize,
}

#[derive(Clone, Copy, ValueEnum)]
enum TableKind {
    MinEdges,
    MaxEdges,
}

#[derive(Subcommand)]
enum Command {
    /// Build a polytope and print its facets
    Construct {
        #[command(flatten)]
        fam: FamilyArgs,
        #[command(flatten)]
        fmt: Format,
    },
    /// Enumerate the face lattice and print the f-vector
    Fvector {
        /// Read a polytope in the JSON incidence format instead of a family ("-" for stdin)
        #[arg(long, conflicts_with = "family")]
        input: Option<PathBuf>,
        #[arg(required_unless_present = "input")]
        family: Option<String>,
        #[arg(long)]
        dim: Option<usize>,
        #[arg(long)]
        k: Option<usize>,
        #[arg(long)]
        j: Option<usize>,
        #[arg(long)]
        r: Option<usize>,
        #[arg(long)]
        s: Option<usize>,
        #[arg(long)]
        verts: Option<usize>,
        #[arg(long, default_value_t = 0)]
        pyr: usize,
        #[command(flatten)]
        fmt: Format,
    },
    /// phi_m(v, d), the triplex face count
    Phi {
        #[command(flatten)]
        vd: VD,
        #[arg(long, default_value_t = 1)]
        m: usize,
        #[command(flatten)]
        fmt: Format,
    },
    /// Least number of edges with v vertices in dimension d
    MinEdges {
        #[command(flatten)]
        vd: VD,
        #[command(flatten)]
        fmt: Format,
    },
    /// Greatest number of edges with v vertices in dimension d
    MaxEdges {
        #[command(flatten)]
        vd: VD,
        #[command(flatten)]
        fmt: Format,
    },
    /// Least number of facets with v vertices in dimension d
    MinFacets {
        #[command(flatten)]
        vd: VD,
        #[command(flatten)]
        fmt: Format,
    },
    /// Least number of ridges of a d-polytope with 2d+1 vertices
    MinRidges {
        #[arg(long)]
        d: usize,
        #[command(flatten)]
        fmt: Format,
    },
    /// Lower bound on the number of m-faces
    FaceBound {
        #[command(flatten)]
        vd: VD,
        #[arg(long)]
        m: usize,
        #[command(flatten)]
        fmt: Format,
    },
    /// Is there a d-polytope with e edges?
    Feasible {
        #[arg(long)]
        dim: usize,
        #[arg(long)]
        edges: u64,
        /// Exit with status 2 when the answer is Infeasible
        #[arg(long)]
        check: bool,
        /// Also print the outcome for every vertex count
        #[arg(long)]
        verbose: bool,
        #[command(flatten)]
        fmt: Format,
    },
    /// Largest dimension of a polytope with e edges
    MaxDim {
        #[arg(long)]
        edges: u64,
        /// Also print the verdict for every dimension
        #[arg(long)]
        verbose: bool,
        #[command(flatten)]
        fmt: Format,
    },
    /// Edge counts that no d-polytope has
    Gaps {
        #[arg(long)]
        dim: usize,
        #[command(flatten)]
        fmt: Format,
    },
    /// Bound values over the (v, d) grid
    Table {
        #[arg(value_enum)]
        kind: TableKind,
        #[arg(long, default_value_t = 7)]
        max_dim: usize,
        #[command(flatten)]
        fmt: Format,
    },
    /// Run the acceptance checks
    Verify {
        /// Run only these checks (1-based)
        #[arg(long = "id")]
        ids: Vec<usize>,
        #[command(flatten)]
        fmt: Format,
    },
    /// Exact rational coordinates for a family, in the point format
    Realize {
        #[command(flatten)]
        fam: FamilyArgs,
    },
    /// Facets of the convex hull of a point file ("-" for stdin)
    Hull {
        points: PathBuf,
        #[command(flatten)]
        fmt: Format,
    },
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) if !e.use_stderr() => {
            print!("{e}");
            return ExitCode::SUCCESS;
        }
        Err(e) => {
            let msg = e.to_string();
            let line = msg.lines().next().unwrap_or("invalid arguments");
            eprintln!("{}", line.trim_start_matches("error: "));
            return ExitCode::from(1);
        }
    };
    let mut out = io::stdout().lock();
    match run(cli.command, &mut out) {
        Ok(code) => ExitCode::from(code),
        Err(e) if e.downcast_ref::<io::Error>().is_some_and(|e| e.kind() == io::ErrorKind::BrokenPipe) => {
            ExitCode::SUCCESS
        }
        Err(e) => {
            let _ = out.flush();
            eprintln!("{e:#}");
            ExitCode::from(1)
        }
    }
}

#[allow(clippy::too_many_arguments)]
fn family_from(
    name: &str,
    dim: Option<usize>,
    k: Option<usize>,
    j: Option<usize>,
    r: Option<usize>,
    s: Option<usize>,
    verts: Option<usize>,
    pyr: usize,
) -> Result<Family> {
    let need = |x: Option<usize>, flag: &str| x.ok_or_else(|| anyhow!("{name} needs --{flag}"));
    let base = if name.contains('(') || name == "sigma3" {
        name.parse::<Family>()?
    } else {
        match name.replace('-', "_").as_str() {
            "simplex" => Family::Simplex { d: need(dim, "dim")? },
            "prism" => Family::Prism { d: need(dim, "dim")? },
            "pentasm" => Family::Pentasm { d: need(dim, "dim")? },
            "triplex" => {
                let k = need(k, "k")?;
                let j = match (j, dim) {
                    (Some(j), Some(d)) if k + j != d => bail!("triplex needs k + j = dim, got {k} + {j} != {d}"),
                    (Some(j), _) => j,
                    (None, Some(d)) if d >= k => d - k,
                    (None, Some(d)) => bail!("triplex needs k <= dim, got k={k}, dim={d}"),
                    (None, None) => bail!("triplex needs --j or --dim"),
                };
                Family::Triplex { k, j }
            }
            "delta_sum" | "delta" => Family::DeltaSum { r: need(r, "r")?, s: need(s, "s")? },
            "cyclic" => Family::Cyclic { d: need(dim, "dim")?, v: need(verts, "verts")? },
            "stacked" => Family::Stacked { d: need(dim, "dim")?, v: need(verts, "verts")? },
            _ => bail!("unknown family `{name}`"),
        }
    };
    let fam = Family::pyramid(base, pyr);
    fam.validate()?;
    Ok(fam)
}

impl FamilyArgs {
    fn resolve(&self) -> Result<Family> {
        family_from(&self.family, self.dim, self.k, self.j, self.r, self.s, self.verts, self.pyr)
    }
}

fn read_input(path: &PathBuf) -> Result<String> {
    if path.as_os_str() == "-" {
        let mut text = String::new();
        io::stdin().read_to_string(&mut text)?;
        Ok(text)
    } else {
        std::fs::read_to_string(path).with_context(|| format!("cannot read {}", path.display()))
    }
}

fn print_polytope(out: &mut impl Write, label: &str, p: &CombinatorialPolytope, fmt: Format) -> Result<()> {
    if fmt.json {
        writeln!(out, "{}", p.to_json())?;
        return Ok(());
    }
    writeln!(out, "{label}: dimension {}, {} vertices, {} facets", p.dim(), p.nverts(), p.nfacets())?;
    for f in p.facets() {
        let f: Vec<String> = f.iter().map(|x| x.to_string()).collect();
        writeln!(out, "  {}", f.join(" "))?;
    }
    Ok(())
}

fn print_bound(out: &mut impl Write, query: String, r: BoundResult, fmt: Format) -> Result<()> {
    if fmt.json {
        writeln!(out, "{}", QueryRecord::new(query, r).to_json())?;
        return Ok(());
    }
    write!(out, "{} [{}] {}", r.value, r.status, r.citation)?;
    if let Some(w) = &r.witness {
        write!(out, "; witness {w}")?;
    }
    if let Some(u) = r.unique {
        write!(out, "; {}", if u { "unique" } else { "not unique" })?;
    }
    writeln!(out)?;
    Ok(())
}

fn describe(outcome: &VertexOutcome) -> String {
    match outcome {
        VertexOutcome::AboveMax { max, citation } => format!("above max {max} ({citation})"),
        VertexOutcome::BelowMin { min, citation } => format!("below min {min} ({citation})"),
        VertexOutcome::InBand { band } => match &band.citation {
            Some(c) => format!("in band {band} ({c})"),
            None => format!("in band {band}"),
        },
        VertexOutcome::Witness { family } => format!("witness {family}"),
        VertexOutcome::Cited { citation } => format!("realised ({citation})"),
        VertexOutcome::Open => "open".into(),
    }
}

fn print_verdict(out: &mut impl Write, v: &FeasibilityVerdict, verbose: bool) -> Result<()> {
    writeln!(out, "{v}")?;
    if verbose {
        for c in &v.citations {
            writeln!(out, "  cites: {c}")?;
        }
        for row in &v.rows {
            writeln!(out, "  v={}: {}", row.v, describe(&row.outcome))?;
        }
    }
    Ok(())
}

fn csv_out(out: &mut impl Write, header: &[&str], rows: Vec<Vec<String>>) -> Result<()> {
    let mut w = csv::Writer::from_writer(out);
    w.write_record(header)?;
    for row in rows {
        w.write_record(row)?;
    }
    w.flush()?;
    Ok(())
}

fn print_table(out: &mut impl Write, column: &str, rows: &[TableRow], fmt: Format) -> Result<()> {
    if fmt.json {
        writeln!(out, "{}", serde_json::to_string(rows)?)?;
        return Ok(());
    }
    let cells: Vec<Vec<String>> = rows
        .iter()
        .map(|r| {
            let w = r.witness.as_ref().map(|w| w.to_string()).unwrap_or_default();
            vec![r.v.to_string(), r.d.to_string(), r.value.to_string(), r.status.to_string(), w]
        })
        .collect();
    let header = ["v", "d", column, "status", "witness"];
    if fmt.csv {
        return csv_out(out, &header, cells);
    }
    let mut widths: Vec<usize> = header.iter().map(|h| h.len()).collect();
    for row in &cells {
        for (w, c) in widths.iter_mut().zip(row) {
            *w = (*w).max(c.len());
        }
    }
    let line = |row: Vec<&str>| {
        let parts: Vec<String> = row.iter().zip(&widths).map(|(c, w)| format!("{c:<w$}")).collect();
        parts.join("  ").trim_end().to_string()
    };
    writeln!(out, "{}", line(header.to_vec()))?;
    for row in &cells {
        writeln!(out, "{}", line(row.iter().map(String::as_str).collect()))?;
    }
    Ok(())
}

fn reject_csv(fmt: Format) -> Result<()> {
    if fmt.csv {
        bail!("--csv is only available for table and gaps");
    }
    Ok(())
}

fn run(command: Command, out: &mut impl Write) -> Result<u8> {
    match command {
        Command::Construct { fam, fmt } => {
            reject_csv(fmt)?;
            let f = fam.resolve()?;
            print_polytope(out, &f.to_string(), &f.build()?, fmt)?;
        }
        Command::Fvector { input, family, dim, k, j, r, s, verts, pyr, fmt } => {
            reject_csv(fmt)?;
            let (label, p) = match (&input, &family) {
                (Some(path), _) => {
                    (path.display().to_string(), CombinatorialPolytope::from_json(&read_input(path)?)?)
                }
                (None, Some(name)) => {
                    let f = family_from(name, dim, k, j, r, s, verts, pyr)?;
                    (f.to_string(), f.build()?)
                }
                (None, None) => bail!("give a family or --input"),
            };
            let fv = enumerate_lattice(&p)?.f_vector();
            if fmt.json {
                writeln!(out, "{}", json!({ "polytope": label, "f_vector": fv }))?;
            } else {
                let parts: Vec<String> = fv.iter().map(|x| x.to_string()).collect();
                writeln!(out, "{}", parts.join(" "))?;
            }
        }
        Command::Phi { vd, m, fmt } => {
            reject_csv(fmt)?;
            let value = phi(m as i64, vd.v as i64, vd.d as i64)?;
            if fmt.json {
                let value = serde_json::to_value(small_or_string(&value))?;
                writeln!(out, "{}", json!({ "query": format!("phi(m={m},v={},d={})", vd.v, vd.d), "value": value }))?;
            } else {
                writeln!(out, "{value}")?;
            }
        }
        Command::MinEdges { vd, fmt } => {
            reject_csv(fmt)?;
            let r = bounds::min_edges(vd.v, vd.d)?;
            print_bound(out, format!("min_edges(v={},d={})", vd.v, vd.d), r, fmt)?;
        }
        Command::MaxEdges { vd, fmt } => {
            reject_csv(fmt)?;
            let r = bounds::max_edges(vd.v, vd.d)?;
            print_bound(out, format!("max_edges(v={},d={})", vd.v, vd.d), r, fmt)?;
        }
        Command::MinFacets { vd, fmt } => {
            reject_csv(fmt)?;
            let r = bounds::min_facets(vd.v, vd.d)?;
            print_bound(out, format!("min_facets(v={},d={})", vd.v, vd.d), r, fmt)?;
        }
        Command::MinRidges { d, fmt } => {
            reject_csv(fmt)?;
            let r = bounds::min_ridges_2dplus1(d)?;
            print_bound(out, format!("min_ridges(d={d})"), r, fmt)?;
        }
        Command::FaceBound { vd, m, fmt } => {
            reject_csv(fmt)?;
            let r = bounds::fm_lower_bound(vd.v, vd.d, m)?;
            print_bound(out, format!("face_bound(v={},d={},m={m})", vd.v, vd.d), r, fmt)?;
        }
        Command::Feasible { dim, edges, check, verbose, fmt } => {
            reject_csv(fmt)?;
            let v = bounds::edges_feasible(dim, edges)?;
            if fmt.json {
                writeln!(out, "{}", QueryRecord::new(format!("feasible(d={dim},e={edges})"), &v).to_json())?;
            } else {
                print_verdict(out, &v, verbose)?;
            }
            if check && v.verdict == Verdict::Infeasible {
                return Ok(2);
            }
        }
        Command::MaxDim { edges, verbose, fmt } => {
            reject_csv(fmt)?;
            let r = bounds::max_dimension_for_edges(edges)?;
            if fmt.json {
                writeln!(out, "{}", QueryRecord::new(format!("max_dim(e={edges})"), &r).to_json())?;
            } else {
                writeln!(out, "{}", r.dim)?;
                if verbose {
                    for c in &r.certificates {
                        writeln!(out, "  d={}: {c}", c.dim)?;
                    }
                }
            }
        }
        Command::Gaps { dim, fmt } => {
            let g = bounds::gaps(dim)?;
            if fmt.json {
                writeln!(out, "{}", QueryRecord::new(format!("gaps(d={dim})"), json!({ "gaps": g })).to_json())?;
            } else if fmt.csv {
                let rows = g.iter().map(|v| vec![v.edges.to_string(), v.reason.clone()]).collect();
                csv_out(out, &["edges", "reason"], rows)?;
            } else {
                for v in &g {
                    writeln!(out, "{:>6}  {}", v.edges, v.reason)?;
                    for c in &v.citations {
                        writeln!(out, "        cites: {c}")?;
                    }
                }
            }
        }
        Command::Table { kind, max_dim, fmt } => {
            let (column, rows) = match kind {
                TableKind::MinEdges => ("min_edges", bounds::bound_table(max_dim, bounds::min_edges)?),
                TableKind::MaxEdges => ("max_edges", bounds::bound_table(max_dim, bounds::max_edges)?),
            };
            print_table(out, column, &rows, fmt)?;
        }
        Command::Verify { ids, fmt } => {
            reject_csv(fmt)?;
            if let Some(bad) = ids.iter().find(|&&i| i == 0 || i > verify::CHECK_COUNT) {
                bail!("check ids run from 1 to {}, got {bad}", verify::CHECK_COUNT);
            }
            let outcomes = if ids.is_empty() {
                verify::run_all()
            } else {
                ids.iter().map(|&i| verify::run(i)).collect()
            };
            let failed = outcomes.iter().filter(|o| !o.passed).count();
            if fmt.json {
                writeln!(out, "{}", serde_json::to_string(&outcomes)?)?;
            } else {
                for o in &outcomes {
                    writeln!(out, "{o}")?;
                }
                writeln!(out, "{} passed, {failed} failed", outcomes.len() - failed)?;
            }
            if failed > 0 {
                return Ok(1);
            }
        }
        Command::Realize { fam } => {
            let f = fam.resolve()?;
            write!(out, "{}", realize(&f)?.to_text())?;
        }
        Command::Hull { points, fmt } => {
            reject_csv(fmt)?;
            let cfg = PointConfiguration::parse(&read_input(&points)?)?;
            let p = hull_facets(&cfg)?;
            if fmt.json {
                print_polytope(out, "", &p, fmt)?;
            } else {
                print_polytope(out, "hull", &p, fmt)?;
                let fv: Vec<String> = enumerate_lattice(&p)?.f_vector().iter().map(|x| x.to_string()).collect();
                writeln!(out, "f-vector: {}", fv.join(" "))?;
            }
        }
    }
    Ok(0)
}

fn small_or_string(x: &BigInt) -> serde_json::Value {
    match i64::try_from(x) {
        Ok(n) => json!(n),
        Err(_) => json!(x.to_string()),
    }
}
