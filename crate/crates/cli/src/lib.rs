//! Command-line front end. [`run`] takes the full argument vector and
//! returns the exit code with the rendered output, so tests can drive it
//! without spawning a process.

use std::time::Instant;

use clap::{Parser, Subcommand, ValueEnum};

use invdiff_core::laurent::{embed_u, parse_laurent};
use invdiff_core::parse::parse_unipoly;
use invdiff_core::pvcat::catalog_listing;
use invdiff_core::smith::parse_words;
use invdiff_core::{Alphabet, Check, CheckStatus, Error, PVSpace, Rationals, Report, UPresentation};

pub const EXIT_OK: i32 = 0;
pub const EXIT_CHECK_FAILED: i32 = 1;
pub const EXIT_USAGE: i32 = 2;

#[derive(Parser, Debug)]
#[command(
    name = "invdiff",
    version,
    about = "Invariant differential operators and Smith algebras, computed exactly"
)]
struct Cli {
    /// Output format
    #[arg(long, value_enum, default_value_t = Format::Text, global = true)]
    format: Format,

    /// Also write the report to this file
    #[arg(long, global = true)]
    out: Option<std::path::PathBuf>,

    /// Record wall-clock time in the report (makes output nondeterministic)
    #[arg(long, global = true)]
    timing: bool,

    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum Format {
    Text,
    Json,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Run every structural check on a space
    Verify {
        /// Catalog name or path to a definition file
        space: String,
        #[arg(long)]
        max_power: Option<usize>,
    },
    /// Tabulate b(k) with Y delta^(k+1) = b(k) delta^k
    Bfunction {
        space: String,
        #[arg(long)]
        max_power: Option<usize>,
    },
    /// Interpolate u with XY = u(E) on radial components
    Ufunction {
        space: String,
        #[arg(long)]
        max_power: Option<usize>,
    },
    /// Radial component of an expression in X, Y, E
    Radial {
        space: String,
        #[arg(long)]
        expr: String,
        #[arg(long)]
        max_power: Option<usize>,
    },
    /// Normal form of an expression in x, y, e inside U(Q, u, n)
    Normalform {
        #[arg(long)]
        u: String,
        #[arg(long)]
        n: u32,
        #[arg(long)]
        expr: String,
    },
    /// Lie-closure dimensions of {X, Y}
    Igusa {
        space: String,
        #[arg(long)]
        depth: usize,
    },
    /// List the built-in spaces
    Spaces,
}

/// Exit code and rendered streams of one invocation.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Outcome {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

impl Outcome {
    fn usage(message: String) -> Self {
        Outcome { code: EXIT_USAGE, stdout: String::new(), stderr: message }
    }
}

pub fn run<I, T>(argv: I) -> Outcome
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let argv: Vec<std::ffi::OsString> = argv.into_iter().map(Into::into).collect();
    let cli = match Cli::try_parse_from(&argv) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
            let text = e.render().to_string();
            return if code == EXIT_OK {
                Outcome { code, stdout: text, stderr: String::new() }
            } else {
                Outcome::usage(text)
            };
        }
    };
    let echo = argv.iter().skip(1).map(|a| a.to_string_lossy()).collect::<Vec<_>>().join(" ");
    let start = Instant::now();
    let mut report = match execute(&cli.command) {
        Ok(r) => r,
        Err(e) => return Outcome::usage(usage_message(&e)),
    };
    report.command = echo;
    if cli.timing {
        report.elapsed_ms = Some(start.elapsed().as_millis() as u64);
    }
    let stdout = match cli.format {
        Format::Text => report.to_text(),
        Format::Json => {
            let mut s = serde_json::to_string_pretty(&report).expect("report serializes");
            s.push('\n');
            s
        }
    };
    if let Some(path) = &cli.out {
        if let Err(e) = std::fs::write(path, &stdout) {
            return Outcome::usage(format!("error: cannot write {}: {e}\n", path.display()));
        }
    }
    let code = if report.passed() { EXIT_OK } else { EXIT_CHECK_FAILED };
    Outcome { code, stdout, stderr: String::new() }
}

fn usage_message(e: &Error) -> String {
    let mut msg = format!("error: {e}\n");
    if matches!(e, Error::UnknownSpace(_)) {
        msg.push_str("available spaces:\n");
        for line in catalog_listing() {
            msg.push_str(&format!("  {line}\n"));
        }
        msg.push_str("or pass a definition file with `name`, `vars` and `delta` lines\n");
    }
    msg
}

fn max_power(space: &PVSpace, requested: Option<usize>) -> usize {
    requested.unwrap_or_else(|| space.default_max_power())
}

/// Usage-level problems become `Err`; mathematical failures are checks.
fn execute(command: &Command) -> Result<Report, Error> {
    let mut report = Report::new("");
    match command {
        Command::Verify { space, max_power: k } => {
            let space = PVSpace::load(space)?;
            let k = max_power(&space, *k);
            check_power(&space, k)?;
            report = space.verify(k);
        }
        Command::Bfunction { space, max_power: k } => {
            let space = PVSpace::load(space)?;
            let k = max_power(&space, *k);
            report.space = Some(space.name.clone());
            match space.bfunction(k) {
                Ok(table) => {
                    report.push(Check::new(
                        "bfunction:proportional",
                        CheckStatus::Pass,
                        format!("k = 0..={k}"),
                    ));
                    report.values_mut().b = Some(table.to_strings());
                }
                Err(e @ Error::NotProportional { .. }) => {
                    report.push(Check::new("bfunction:proportional", CheckStatus::Fail, e.to_string()))
                }
                Err(e) => return Err(e),
            }
        }
        Command::Ufunction { space, max_power: k } => {
            let space = PVSpace::load(space)?;
            let k = max_power(&space, *k);
            report.space = Some(space.name.clone());
            ufunction(&space, k, &mut report)?;
        }
        Command::Radial { space, expr, max_power: k } => {
            let space = PVSpace::load(space)?;
            let k = max_power(&space, *k);
            report.space = Some(space.name.clone());
            let op = space.eval_operator(expr)?;
            match space.radial_component(&op, 1) {
                Ok(r) => {
                    report.push(Check::new("radial:component", CheckStatus::Pass, ""));
                    report.values_mut().result = Some(r.to_string());
                    if let Some(u) = ufunction(&space, k, &mut report)? {
                        let upres = space.u_presentation(u);
                        let model = parse_laurent(expr, &upres, Alphabet::Operators)?;
                        report.push(Check::from_bool(
                            "radial:agrees-with-model",
                            model == r,
                            format!("model value {model}"),
                        ));
                    }
                }
                Err(e) => report.push(Check::new("radial:component", CheckStatus::Fail, e.to_string())),
            }
        }
        Command::Normalform { u, n, expr } => {
            let u = parse_unipoly(u, "t")?;
            let upres = UPresentation::new(u, *n)?;
            let words = parse_words(expr, Rationals, Alphabet::Abstract, false)?;
            let nf = upres.normalize(&words)?;
            report.values_mut().result = Some(nf.to_string());
            if !upres.u.is_zero() {
                let embedded = embed_u(&nf, &upres);
                let direct = invdiff_core::laurent::eval_words(&words, &upres);
                report.push(Check::from_bool(
                    "normalform:localized-model",
                    embedded == direct,
                    embedded.to_string(),
                ));
            }
        }
        Command::Igusa { space, depth } => {
            let space = PVSpace::load(space)?;
            report.space = Some(space.name.clone());
            let dims = space.igusa_closure(*depth)?;
            let detail = match dims.windows(2).position(|w| w[0] == w[1]) {
                Some(i) => format!("stabilizes at {} by depth {}", dims[i], i + 1),
                None => "strictly increasing".to_string(),
            };
            report.push(Check::new("igusa:closure", CheckStatus::Pass, detail));
            report.values_mut().dims = Some(dims);
        }
        Command::Spaces => {
            report.values_mut().spaces = Some(catalog_listing());
        }
    }
    Ok(report)
}

fn check_power(space: &PVSpace, k: usize) -> Result<(), Error> {
    let min = space.d0 as usize + 2;
    if k < min {
        return Err(Error::Usage(format!("max power must be at least d0 + 2 = {min}")));
    }
    Ok(())
}

fn ufunction(space: &PVSpace, k: usize, report: &mut Report) -> Result<Option<invdiff_core::QPoly>, Error> {
    check_power(space, k)?;
    let table = match space.bfunction(k) {
        Ok(t) => t,
        Err(e @ Error::NotProportional { .. }) => {
            report.push(Check::new("bfunction:proportional", CheckStatus::Fail, e.to_string()));
            return Ok(None);
        }
        Err(e) => return Err(e),
    };
    report.values_mut().b = Some(table.to_strings());
    match space.u_from_table(&table) {
        Ok(u) => {
            let status =
                if u.degree() == Some(space.d0 as usize) { CheckStatus::Pass } else { CheckStatus::Flag };
            report.push(Check::new(
                "ufunction:degree",
                status,
                format!("deg u = {}", u.degree().map_or_else(|| "-inf".to_string(), |d| d.to_string())),
            ));
            report.values_mut().u = Some(u.to_string());
            Ok(Some(u))
        }
        Err(e) => {
            report.push(Check::new("ufunction:stable", CheckStatus::Fail, e.to_string()));
            Ok(None)
        }
    }
}
