//! `hopfgal`: batch verification and Galois-correspondence reports.

mod commands;
mod input;
mod report;

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use hopf_galois::linalg::set_dimension_cap;
use hopf_galois::{Error, Field};
use serde_json::{json, Value};

use report::Report;

#[derive(Parser)]
#[command(name = "hopfgal", version, about = "Exact Hopf–Galois correspondences for finite-dimensional extensions")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Args, Clone)]
struct Common {
    /// Builder name (`circle_hopf`, `group_algebra`, ...) or a JSON builder reference.
    #[arg(long)]
    builder: Option<String>,
    /// Group for the group-algebra builders, e.g. `S3`, `D8`, `Z4`, `Z2xZ2`.
    #[arg(long)]
    group: Option<String>,
    /// JSON file holding a structure or a builder reference.
    #[arg(long)]
    input: Option<String>,
    /// Ground field: `Q`, `Qi` or `Fp:<p>`.
    #[arg(long)]
    field: Option<String>,
    /// Report path; standard output otherwise.
    #[arg(long)]
    out: Option<PathBuf>,
    /// DOT path for lattice diagrams.
    #[arg(long)]
    dot: Option<PathBuf>,
    /// Run the 1024-dimensional exact rank computation for the worked example.
    #[arg(long)]
    full: bool,
    /// Dimension cap for dense and tensor computations.
    #[arg(long)]
    cap: Option<usize>,
}

#[derive(Clone, Copy, ValueEnum)]
enum Target {
    Full,
    #[value(name = "Q")]
    Q,
    #[value(name = "S")]
    S,
    Coring,
    Coext,
}

impl Target {
    fn name(self) -> &'static str {
        match self {
            Target::Full => "full",
            Target::Q => "Q",
            Target::S => "S",
            Target::Coring => "coring",
            Target::Coext => "coext",
        }
    }
}

#[derive(Subcommand)]
enum Command {
    /// Check the structure axioms.
    Verify(Common),
    /// Solve for the group-like elements.
    GroupLikes(Common),
    /// Round trips of the Takeuchi correspondence.
    Takeuchi(Common),
    /// The Galois connection between generalized quotients and subalgebras.
    Connection(Common),
    /// Rank verdicts for canonical maps.
    Can {
        #[arg(long, value_enum)]
        target: Target,
        #[command(flatten)]
        common: Common,
    },
    /// Emit the subobject lattice.
    Lattice(Common),
    /// Closedness certificates.
    Closed(Common),
    /// Congruence and submonoid bridges for Map(G, E).
    Bridge(Common),
    /// The worked example: A^H, the 8×8 coefficient matrices and the φ-image lattice.
    ExampleCircle(Common),
    /// Print the JSON schema of all reports.
    ReportSchema,
}

fn input_echo(c: &Common) -> Value {
    let mut v = json!({});
    if let Some(b) = &c.builder {
        v["builder"] = serde_json::from_str(b).unwrap_or_else(|_| Value::String(b.clone()));
    }
    if let Some(g) = &c.group {
        v["group"] = Value::String(g.clone());
    }
    if let Some(i) = &c.input {
        v["file"] = Value::String(i.clone());
    }
    if c.full {
        v["full"] = Value::Bool(true);
    }
    v
}

fn write(path: &Option<PathBuf>, text: &str) -> Result<(), Error> {
    match path {
        Some(p) => std::fs::write(p, text).map_err(|e| Error::Input(format!("{}: {e}", p.display()))),
        None => {
            print!("{text}");
            Ok(())
        }
    }
}

fn run(cli: Cli) -> Result<bool, Error> {
    let (name, common, target) = match &cli.command {
        Command::ReportSchema => {
            let text = serde_json::to_string_pretty(&report::schema()).expect("schema serializes");
            println!("{text}");
            return Ok(true);
        }
        Command::Verify(c) => ("verify", c, None),
        Command::GroupLikes(c) => ("group-likes", c, None),
        Command::Takeuchi(c) => ("takeuchi", c, None),
        Command::Connection(c) => ("connection", c, None),
        Command::Can { target, common } => ("can", common, Some(*target)),
        Command::Lattice(c) => ("lattice", c, None),
        Command::Closed(c) => ("closed", c, None),
        Command::Bridge(c) => ("bridge", c, None),
        Command::ExampleCircle(c) => ("example-circle", c, None),
    };
    if let Some(cap) = common.cap {
        set_dimension_cap(cap);
    }
    let field = common.field.as_deref().map(Field::from_label).transpose()?;
    let (outcome, field_label) = if name == "example-circle" {
        if common.builder.is_some() || common.input.is_some() {
            return Err(Error::Input("example-circle takes no input".into()));
        }
        if field.is_some_and(|f| f != Field::Qi) {
            return Err(Error::Input("the worked example is defined over Qi".into()));
        }
        (commands::example_circle(common.full)?, Field::Qi.label())
    } else {
        let subject = input::load(common.builder.as_deref(), common.input.as_deref(), common.group.as_deref(), field)?;
        let label = subject.field().label();
        let outcome = match name {
            "verify" => commands::verify(&subject)?,
            "group-likes" => commands::group_likes(&subject)?,
            "takeuchi" => commands::takeuchi(&subject)?,
            "connection" => commands::connection(&subject)?,
            "can" => commands::can(&subject, target.expect("can has a target").name(), common.full)?,
            "lattice" => commands::lattice(&subject)?,
            "closed" => commands::closed(&subject)?,
            _ => commands::bridge(&subject)?,
        };
        (outcome, label)
    };
    let report = Report::new(name, input_echo(common), field_label, outcome.certificates, outcome.data);
    write(&common.out, &report.to_json())?;
    if let (Some(path), Some(dot)) = (&common.dot, &outcome.dot) {
        write(&Some(path.clone()), dot)?;
    }
    Ok(report.ok)
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(true) => ExitCode::from(0),
        Ok(false) => ExitCode::from(1),
        Err(e) => {
            eprintln!("hopfgal: {e}");
            ExitCode::from(2)
        }
    }
}
