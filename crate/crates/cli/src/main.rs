mod bargraph;
mod output;

use std::ops::RangeInclusive;
use std::path::PathBuf;
use std::process::ExitCode;

use carlitz_arndt::bijections::{ca_ge_to_pell, ca_le_to_q};
use carlitz_arndt::oracle::{compare_bfile, run_suite, BFile, Bounds, Suite};
use carlitz_arndt::series::{gf_for_family, signature_for_family};
use carlitz_arndt::{
    count_up_to, enumerate, BijectionId, BijectionName, Composition, Error, Family, FamilyKind,
};
use clap::{Args, Parser, Subcommand};

use bargraph::Labels;
use output::{emit, Cell, OutputFormat, PlainStyle, Table};

#[derive(Parser)]
#[command(
    name = "cacomp",
    version,
    about = "Carlitz-Arndt style restricted compositions"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Args, Clone, Copy)]
struct FamilyArgs {
    /// all, ca, ca-ge, ca-le, no11, pell-ge, q-le, arndt
    #[arg(long, value_parser = parse_kind)]
    family: FamilyKind,
    #[arg(long)]
    k: Option<u32>,
}

impl FamilyArgs {
    fn family(self) -> Result<Family, Error> {
        Family::new(self.family, self.k)
    }
}

#[derive(Args, Clone, Copy)]
struct FormatArg {
    #[arg(long, value_enum, default_value_t)]
    format: OutputFormat,
}

#[derive(Subcommand)]
enum Command {
    /// List the members of a family at weight n.
    Enumerate {
        #[command(flatten)]
        family: FamilyArgs,
        #[arg(long)]
        n: u32,
        #[command(flatten)]
        format: FormatArg,
    },
    /// Count the members of a family for one n or a range.
    Count {
        #[command(flatten)]
        family: FamilyArgs,
        #[arg(long, conflicts_with = "n_range", required_unless_present = "n_range")]
        n: Option<u32>,
        /// e.g. 1..10
        #[arg(long, value_parser = parse_range)]
        n_range: Option<RangeInclusive<u32>>,
        #[command(flatten)]
        format: FormatArg,
    },
    /// Count table with rows by k, columns by n and a recurrence signature column.
    Table {
        /// a family taking k: ca-ge, ca-le, pell-ge, q-le
        #[arg(long, value_parser = parse_kind)]
        family: FamilyKind,
        #[arg(long, value_parser = parse_range, default_value = "1..4")]
        k_range: RangeInclusive<u32>,
        #[arg(long, value_parser = parse_range, default_value = "1..10")]
        n_range: RangeInclusive<u32>,
        #[command(flatten)]
        format: FormatArg,
    },
    /// Trace a bijection over every element of its domain at union weight n.
    Bijection {
        /// ca-odd, ca-even, ca-no11, ca-ge-odd, ca-ge-even, ca-ge-pell, ca-le-q, q-last1, q-last-even
        #[arg(value_parser = parse_bijection)]
        name: BijectionName,
        #[arg(long)]
        k: Option<u32>,
        #[arg(long)]
        n: u32,
        /// Only rows whose composition changes.
        #[arg(long)]
        moved_only: bool,
        #[command(flatten)]
        format: FormatArg,
    },
    /// Maclaurin coefficients 0..=terms of a family's generating function.
    Gf {
        #[command(flatten)]
        family: FamilyArgs,
        #[arg(long, default_value_t = 20)]
        terms: u32,
        #[command(flatten)]
        format: FormatArg,
    },
    /// Run verification suites; exits 1 if any check fails.
    Check {
        #[arg(long, value_parser = parse_suite, default_value = "all")]
        suite: Suite,
        /// Largest n for every suite (default 18 unmarked, 16 marked, 25 for series).
        #[arg(long)]
        n_max: Option<u32>,
        #[command(flatten)]
        format: FormatArg,
    },
    /// Draw a composition as a bargraph, optionally labelled with its
    /// image under the ca-ge or ca-le encoding.
    Bargraph {
        #[arg(value_parser = parse_composition)]
        composition: Composition,
        #[arg(long, value_parser = parse_kind)]
        family: Option<FamilyKind>,
        #[arg(long)]
        k: Option<u32>,
    },
    /// Compare family counts with an OEIS b-file; exits 1 on mismatch.
    BfileCompare {
        #[command(flatten)]
        family: FamilyArgs,
        #[arg(long)]
        bfile: PathBuf,
        /// Ignore entries beyond this index.
        #[arg(long)]
        n_max: Option<u32>,
        #[command(flatten)]
        format: FormatArg,
    },
}

fn parse_kind(s: &str) -> Result<FamilyKind, String> {
    s.parse().map_err(|e: Error| e.to_string())
}

fn parse_bijection(s: &str) -> Result<BijectionName, String> {
    s.parse().map_err(|e: Error| e.to_string())
}

fn parse_suite(s: &str) -> Result<Suite, String> {
    s.parse().map_err(|e: Error| e.to_string())
}

fn parse_composition(s: &str) -> Result<Composition, String> {
    s.parse().map_err(|e: Error| e.to_string())
}

/// `a..b`, `a-b` or a single value.
fn parse_range(s: &str) -> Result<RangeInclusive<u32>, String> {
    let (a, b) = s
        .split_once("..")
        .or_else(|| s.split_once('-'))
        .unwrap_or((s, s));
    let num = |t: &str| {
        t.trim()
            .parse::<u32>()
            .map_err(|_| format!("bad range {s:?}"))
    };
    let (a, b) = (num(a)?, num(b)?);
    if a > b {
        return Err(format!("empty range {s:?}"));
    }
    Ok(a..=b)
}

enum Failure {
    Usage(String),
    Verification,
    Other(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Failure {
        match e {
            Error::InvalidInput(_)
            | Error::InvalidParameter { .. }
            | Error::NotMember { .. }
            | Error::UnsupportedFamily(_) => Failure::Usage(e.to_string()),
            _ => Failure::Other(e.to_string()),
        }
    }
}

impl From<std::io::Error> for Failure {
    fn from(e: std::io::Error) -> Failure {
        Failure::Other(e.to_string())
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli.command) {
        Ok(()) => ExitCode::SUCCESS,
        Err(Failure::Verification) => ExitCode::from(1),
        Err(Failure::Usage(m)) => {
            eprintln!("error: {m}");
            ExitCode::from(2)
        }
        Err(Failure::Other(m)) => {
            eprintln!("error: {m}");
            ExitCode::from(3)
        }
    }
}

fn run(command: Command) -> Result<(), Failure> {
    match command {
        Command::Enumerate { family, n, format } => {
            let f = family.family()?;
            let mut t = Table::new(&["n", "shorthand", "composition"], PlainStyle::Rows);
            for c in enumerate(f, n) {
                t.push(vec![n.into(), c.shorthand().into(), c.list_form().into()]);
            }
            emit(&t.render(format.format))?;
        }
        Command::Count {
            family,
            n,
            n_range,
            format,
        } => {
            let f = family.family()?;
            let range = n_range.unwrap_or_else(|| {
                let n = n.expect("clap requires n or n-range");
                n..=n
            });
            let counts = count_up_to(f, *range.end());
            let mut t = Table::new(&["n", "count"], PlainStyle::Rows);
            for n in range {
                t.push(vec![n.into(), Cell::Big(counts[n as usize].to_string())]);
            }
            emit(&t.render(format.format))?;
        }
        Command::Table {
            family,
            k_range,
            n_range,
            format,
        } => {
            if !family.takes_k() {
                return Err(Failure::Usage(format!(
                    "family {family} has no parameter k"
                )));
            }
            let mut cols = vec!["k".to_string()];
            cols.extend(n_range.clone().map(|n| n.to_string()));
            cols.push("signature".into());
            let col_refs: Vec<&str> = cols.iter().map(String::as_str).collect();
            let mut t = Table::new(&col_refs, PlainStyle::Header);
            for k in k_range {
                let f = Family::new(family, Some(k))?;
                let counts = count_up_to(f, *n_range.end());
                let mut row: Vec<Cell> = vec![k.into()];
                row.extend(
                    n_range
                        .clone()
                        .map(|n| Cell::Big(counts[n as usize].to_string())),
                );
                let sig = signature_for_family(f).map_or("-".into(), |(s, _)| s.to_string());
                row.push(sig.into());
                t.push(row);
            }
            emit(&t.render(format.format))?;
        }
        Command::Bijection {
            name,
            k,
            n,
            moved_only,
            format,
        } => {
            let id = BijectionId::new(name, k)?;
            let mut t = Table::new(
                &["domain", "domain_set", "image", "image_set"],
                PlainStyle::Rows,
            );
            for x in id.domain(n) {
                let y = id.forward(&x)?;
                if moved_only && x.comp == y.comp {
                    continue;
                }
                let arrow = if format.format == OutputFormat::Plain {
                    "↦ "
                } else {
                    ""
                };
                t.push(vec![
                    x.comp.to_string().into(),
                    format!("∈ {}", x.set_name()).into(),
                    format!("{arrow}{}", y.comp).into(),
                    format!("∈ {}", y.set_name()).into(),
                ]);
            }
            if format.format != OutputFormat::Plain {
                for row in &mut t.rows {
                    for i in [1, 3] {
                        if let Cell::Text(s) = &mut row[i] {
                            *s = s.trim_start_matches("∈ ").to_string();
                        }
                    }
                }
            }
            emit(&t.render(format.format))?;
        }
        Command::Gf {
            family,
            terms,
            format,
        } => {
            let f = family.family()?;
            let coeffs = gf_for_family(f)?.coefficients(terms as usize)?;
            let mut t = Table::new(&["n", "coefficient"], PlainStyle::Line);
            for (n, c) in coeffs.values().iter().enumerate() {
                t.push(vec![(n as u32).into(), Cell::Big(c.to_string())]);
            }
            emit(&t.render(format.format))?;
        }
        Command::Check {
            suite,
            n_max,
            format,
        } => {
            let bounds = n_max.map_or_else(Bounds::default, Bounds::with_n_max);
            let reports = run_suite(suite, &bounds);
            let mut text = String::new();
            for r in &reports {
                match format.format {
                    OutputFormat::JsonLines => text.push_str(&r.to_json()),
                    OutputFormat::Tsv => text.push_str(&format!(
                        "{}\t{}\t{}\t{}",
                        r.suite,
                        if r.passed() { "pass" } else { "fail" },
                        r.checks,
                        r.failures.len()
                    )),
                    OutputFormat::Plain => text.push_str(&r.to_string()),
                }
                text.push('\n');
            }
            if format.format == OutputFormat::Tsv {
                text.insert_str(0, "suite\tstatus\tchecks\tfailures\n");
            }
            emit(&text)?;
            if reports.iter().any(|r| !r.passed()) {
                return Err(Failure::Verification);
            }
        }
        Command::Bargraph {
            composition,
            family,
            k,
        } => {
            let mut text = String::new();
            let labels = match family {
                None => Labels::None,
                Some(kind) => {
                    let f = Family::new(kind, k)?;
                    if !f.contains(&composition)? {
                        return Err(Error::NotMember {
                            composition: composition.list_form(),
                            set: f.to_string(),
                        }
                        .into());
                    }
                    let k = f.k().unwrap_or(1);
                    let (image, labels) = match kind {
                        FamilyKind::Ca | FamilyKind::CaGeK => {
                            (ca_ge_to_pell(k, &composition)?, Labels::Pell)
                        }
                        FamilyKind::CaLeK => (ca_le_to_q(k, &composition)?, Labels::Q),
                        _ => {
                            return Err(Failure::Usage(
                                "bargraph labels need family ca, ca-ge or ca-le".into(),
                            ))
                        }
                    };
                    text.push_str(&format!(
                        "{} ↦ {}\n",
                        composition.list_form(),
                        image.list_form()
                    ));
                    labels
                }
            };
            text.push_str(&bargraph::render(&composition, labels));
            emit(&text)?;
        }
        Command::BfileCompare {
            family,
            bfile,
            n_max,
            format,
        } => {
            let f = family.family()?;
            let file = BFile::read(&bfile)?;
            let report = compare_bfile(f, &file, n_max);
            let text = match format.format {
                OutputFormat::JsonLines => report.to_json(),
                _ => report.to_string(),
            };
            emit(&format!("{text}\n"))?;
            if !report.passed() {
                return Err(Failure::Verification);
            }
        }
    }
    Ok(())
}
