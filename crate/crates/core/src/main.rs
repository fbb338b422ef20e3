use std::fmt;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};

use scx::complex::{self, classify_dual, format, ComplexError, DualShape, PureComplex};
use scx::construct;
use scx::exec::{self, Execution};
use scx::poly::{self, PolyError};
use scx::{FieldElement, FieldSpec, Polynomial};

#[derive(Parser)]
#[command(
    name = "scx",
    version,
    about = "Long-diameter simplicial complexes: build, check, measure"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Generate a complex and write it as an scx v1 file.
    #[command(subcommand)]
    Gen(Gen),
    /// Evaluate predicates on a complex; exit 1 if any is false.
    Check(CheckArgs),
    /// Print the dual-graph diameter of a complex.
    Diameter(DiameterArgs),
    /// Primitive polynomial search.
    #[command(subcommand)]
    Poly(PolyCommand),
    /// Build the colored-window corridor and compare its diameter to the bounds.
    Report(ReportArgs),
}

#[derive(Subcommand)]
enum Gen {
    /// Colored-window complex of a linear recurrence.
    Lfsr(GenLfsrArgs),
    /// Double a corridor (or, with --closed, a closed corridor).
    Double(GenDoubleArgs),
}

#[derive(Args)]
struct GenLfsrArgs {
    #[arg(long)]
    q: u64,
    #[arg(long)]
    d: usize,
    /// Feedback coefficients a_1,...,a_{d-1} as canonical indices.
    #[arg(long, value_delimiter = ',')]
    poly: Option<Vec<u64>>,
    /// Initial state u_0,...,u_{d-2} as canonical indices.
    #[arg(long, value_delimiter = ',')]
    seed: Option<Vec<u64>>,
    /// Remove facet I (in sequence order) to get a corridor.
    #[arg(long, value_name = "I")]
    drop_facet: Option<usize>,
    #[arg(short, long)]
    output: PathBuf,
}

#[derive(Args)]
struct GenDoubleArgs {
    #[arg(long)]
    input: PathBuf,
    /// Input is a closed corridor; no balls are glued.
    #[arg(long)]
    closed: bool,
    #[arg(short, long)]
    output: PathBuf,
}

#[derive(Args)]
struct CheckArgs {
    #[arg(long)]
    input: PathBuf,
    /// Pseudo-manifold without boundary.
    #[arg(long)]
    pm: bool,
    /// Every ridge in an even number of facets.
    #[arg(long)]
    duoid: bool,
    #[arg(long)]
    normal: bool,
    /// Dual graph is a path.
    #[arg(long)]
    corridor: bool,
    /// Dual graph is a cycle.
    #[arg(long)]
    closed_corridor: bool,
}

#[derive(Args)]
struct DiameterArgs {
    #[arg(long)]
    input: PathBuf,
    #[arg(long)]
    threads: Option<usize>,
}

#[derive(Subcommand)]
enum PolyCommand {
    /// Smallest primitive polynomial of the given degree, or their number.
    Search(PolySearchArgs),
}

#[derive(Args)]
struct PolySearchArgs {
    #[arg(long)]
    q: u64,
    #[arg(long)]
    deg: usize,
    #[arg(long)]
    all_nonzero: bool,
    #[arg(long)]
    count: bool,
}

#[derive(Args)]
struct ReportArgs {
    #[arg(long)]
    q: u64,
    #[arg(long)]
    d: usize,
    /// Also double the corridor into a pseudo-manifold.
    #[arg(long)]
    double: bool,
    /// Tab-separated output with a header line.
    #[arg(long)]
    tsv: bool,
}

/// Exit status 2 with a message.
struct Fatal(String);

impl<E: fmt::Display> From<E> for Fatal {
    fn from(e: E) -> Self {
        Fatal(e.to_string())
    }
}

type CmdResult = Result<ExitCode, Fatal>;

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = match cli.command {
        Command::Gen(Gen::Lfsr(args)) => gen_lfsr(args),
        Command::Gen(Gen::Double(args)) => gen_double(args),
        Command::Check(args) => check(args),
        Command::Diameter(args) => diameter(args),
        Command::Poly(PolyCommand::Search(args)) => poly_search(args),
        Command::Report(args) => report(args),
    };
    result.unwrap_or_else(|Fatal(msg)| {
        eprintln!("scx: {msg}");
        ExitCode::from(2)
    })
}

fn join<T: fmt::Display>(items: &[T]) -> String {
    items.iter().map(T::to_string).collect::<Vec<_>>().join(",")
}

fn elements(field: &FieldSpec, indices: &[u64]) -> Result<Vec<FieldElement>, Fatal> {
    indices
        .iter()
        .map(|&i| field.element_of_index(i).map_err(Fatal::from))
        .collect()
}

fn summary(c: &PureComplex) -> String {
    let shape = classify_dual(c).map(|s| s.name()).unwrap_or("empty");
    format!("{shape}, {} facets, n={}", c.len(), c.n())
}

fn read(path: &Path) -> Result<(PureComplex, Vec<String>), Fatal> {
    let text =
        std::fs::read_to_string(path).map_err(|e| Fatal(format!("{}: {e}", path.display())))?;
    format::parse_with_comments(&text).map_err(|e| Fatal(format!("{}: {e}", path.display())))
}

fn gen_lfsr(args: GenLfsrArgs) -> CmdResult {
    let field = FieldSpec::new(args.q)?;
    let poly = match &args.poly {
        Some(coeffs) => Some(Polynomial::new(&field, coeffs)?),
        None => None,
    };
    let seed = match &args.seed {
        Some(s) => Some(elements(&field, s)?),
        None => None,
    };
    let built = construct::build_lfsr_complex(args.q, args.d, poly.as_ref(), seed.as_deref())?;
    let seed_idx: Vec<u64> = built
        .seed
        .iter()
        .map(|s| field.canonical_index(s))
        .collect::<Result<_, _>>()?;
    let mut comments = vec![format!(
        "encoding lfsr q={} d={} poly={} seed={}",
        args.q,
        args.d,
        join(built.polynomial.coeffs()),
        join(&seed_idx)
    )];
    let mut c = built.complex;
    if let Some(i) = args.drop_facet {
        c = construct::drop_facet(&c, i)?;
        comments.push(format!("dropped facet {i}"));
    }
    format::write_complex(&args.output, &c, &comments)?;
    println!("{}", summary(&c));
    Ok(ExitCode::SUCCESS)
}

fn gen_double(args: GenDoubleArgs) -> CmdResult {
    let (c, _) = read(&args.input)?;
    let (out, note) = if args.closed {
        (
            construct::double_closed_corridor(&c)?,
            "encoding double closed",
        )
    } else {
        (construct::double_corridor(&c)?, "encoding double")
    };
    format::write_complex(&args.output, &out, &[format!("{note} v^j=2v+j-1")])?;
    println!("{}", summary(&out));
    Ok(ExitCode::SUCCESS)
}

fn check(args: CheckArgs) -> CmdResult {
    let (c, _) = read(&args.input)?;
    let shape = || classify_dual(&c).ok();
    let mut results: Vec<(&str, bool)> = Vec::new();
    if args.pm {
        results.push(("pm", complex::is_pseudo_manifold(&c)));
    }
    if args.duoid {
        results.push(("duoid", complex::is_semi_duoid(&c)));
    }
    if args.normal {
        results.push(("normal", complex::is_normal(&c)?));
    }
    if args.corridor {
        results.push(("corridor", matches!(shape(), Some(DualShape::Path(_)))));
    }
    if args.closed_corridor {
        results.push((
            "closed-corridor",
            matches!(shape(), Some(DualShape::Cycle(_))),
        ));
    }
    if results.is_empty() {
        return Err(Fatal(
            "no predicate requested (use --pm, --duoid, --normal, --corridor, --closed-corridor)"
                .into(),
        ));
    }
    for (name, value) in &results {
        println!("{name}: {value}");
    }
    Ok(if results.iter().all(|&(_, v)| v) {
        ExitCode::SUCCESS
    } else {
        ExitCode::from(1)
    })
}

fn diameter(args: DiameterArgs) -> CmdResult {
    let (c, _) = read(&args.input)?;
    if args.threads == Some(0) {
        return Err(Fatal("--threads must be positive".into()));
    }
    match exec::with_threads(args.threads, || {
        complex::diameter_with(&c, Execution::Parallel)
    }) {
        Ok(d) => {
            println!("{d}");
            Ok(ExitCode::SUCCESS)
        }
        Err(ComplexError::Disconnected) => {
            println!("disconnected");
            Ok(ExitCode::from(1))
        }
        Err(e) => Err(e.into()),
    }
}

fn poly_search(args: PolySearchArgs) -> CmdResult {
    let field = FieldSpec::new(args.q)?;
    if args.count {
        let n = if args.all_nonzero {
            poly::primitive_polynomials(&field, args.deg)?
                .iter()
                .filter(|p| !p.has_zero_coefficient())
                .count() as u64
        } else {
            poly::count_primitive(&field, args.deg)?
        };
        println!("{n}");
        return Ok(ExitCode::SUCCESS);
    }
    match poly::find_primitive(&field, args.deg, args.all_nonzero) {
        Ok(p) => {
            println!("{}", join(p.coeffs()));
            Ok(ExitCode::SUCCESS)
        }
        Err(e @ PolyError::NotFound { .. }) => {
            eprintln!("scx: {e}");
            Ok(ExitCode::from(1))
        }
        Err(e) => Err(e.into()),
    }
}

struct Row {
    kind: &'static str,
    q: u64,
    d: usize,
    n: usize,
    facets: usize,
    diameter: u32,
    lower: i128,
    upper: u64,
}

impl Row {
    fn holds(&self) -> bool {
        self.lower <= self.diameter as i128 && self.diameter as u64 <= self.upper
    }
}

fn row(kind: &'static str, q: u64, c: &PureComplex) -> Result<Row, Fatal> {
    let (n, d) = (c.n() as u64, c.d() as u64);
    let lower = match kind {
        "corridor" => complex::corridor_lower_bound(n, d)?,
        _ => complex::pseudo_manifold_lower_bound(n, d)?,
    };
    Ok(Row {
        kind,
        q,
        d: c.d(),
        n: c.n(),
        facets: c.len(),
        diameter: complex::diameter(c)?,
        lower,
        upper: complex::hirsch_upper_bound(n, d)?,
    })
}

fn report(args: ReportArgs) -> CmdResult {
    let built = construct::build_lfsr_complex(args.q, args.d, None, None)?;
    let corridor = construct::drop_facet(&built.complex, 0)?;
    let mut rows = vec![row("corridor", args.q, &corridor)?];
    if args.double {
        let doubled = construct::double_corridor(&corridor)?;
        rows.push(row("doubled", args.q, &doubled)?);
    }

    let header = [
        "kind", "q", "d", "n", "facets", "diameter", "lower", "upper",
    ];
    let cells: Vec<[String; 8]> = rows
        .iter()
        .map(|r| {
            [
                r.kind.to_string(),
                r.q.to_string(),
                r.d.to_string(),
                r.n.to_string(),
                r.facets.to_string(),
                r.diameter.to_string(),
                r.lower.to_string(),
                r.upper.to_string(),
            ]
        })
        .collect();
    if args.tsv {
        println!("{}", header.join("\t"));
        for line in &cells {
            println!("{}", line.join("\t"));
        }
    } else {
        let width: Vec<usize> = (0..header.len())
            .map(|k| {
                cells
                    .iter()
                    .map(|c| c[k].len())
                    .chain([header[k].len()])
                    .max()
                    .unwrap_or(0)
            })
            .collect();
        let print = |fields: Vec<&str>| {
            let line: Vec<String> = fields
                .iter()
                .enumerate()
                .map(|(k, f)| {
                    if k == 0 {
                        format!("{f:<w$}", w = width[k])
                    } else {
                        format!("{f:>w$}", w = width[k])
                    }
                })
                .collect();
            println!("{}", line.join("  "));
        };
        print(header.to_vec());
        for line in &cells {
            print(line.iter().map(String::as_str).collect());
        }
    }

    let mut ok = true;
    for r in rows.iter().filter(|r| !r.holds()) {
        eprintln!(
            "scx: {} q={} d={}: diameter {} outside [{}, {}]",
            r.kind, r.q, r.d, r.diameter, r.lower, r.upper
        );
        ok = false;
    }
    Ok(if ok {
        ExitCode::SUCCESS
    } else {
        ExitCode::from(1)
    })
}
