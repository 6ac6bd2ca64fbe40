//! Command-line dispatch.
//!
//! `run` is the whole surface: it parses arguments, executes one
//! subcommand, writes to the provided streams, and returns the process
//! exit code. Codes: 0 success, 1 axiom violation found by `check`,
//! 2 parse/usage/IO error, 3 catalog verification mismatch.

use std::fmt::Write as _;
use std::io::Write;
use std::path::Path;

use clap::error::ErrorKind;
use clap::{Arg, ArgAction, ArgMatches, Command};

use mock_lie::algebra::Algebra;
use mock_lie::catalog::{catalog, catalog_entry};
use mock_lie::der::{
    der_structure_constants, derivation_basis, render_parametric, verify_catalog, DerivationSpace,
    VerificationReport,
};
use mock_lie::field::{FieldDescriptor, Scalar};

use crate::doc;
use crate::report::{
    self, BracketEntry, CatalogList, CatalogRow, Report, VerifyCatalogReport, VerifyEntry,
};

const EXIT_OK: i32 = 0;
const EXIT_AXIOM: i32 = 1;
const EXIT_USAGE: i32 = 2;
const EXIT_MISMATCH: i32 = 3;

/// A command failure: exit code plus a message for stderr.
struct Failure {
    code: i32,
    message: String,
}

impl Failure {
    fn usage(message: impl Into<String>) -> Failure {
        Failure {
            code: EXIT_USAGE,
            message: message.into(),
        }
    }
}

fn command() -> Command {
    let file = |name: &'static str| Arg::new(name).value_name("FILE").required(true);
    Command::new("mocklie")
        .about("Exact derivation algebras of finite-dimensional mock-Lie algebras")
        .version(env!("CARGO_PKG_VERSION"))
        .subcommand_required(true)
        .arg_required_else_help(true)
        .arg(
            Arg::new("json")
                .long("json")
                .action(ArgAction::SetTrue)
                .global(true)
                .help("Emit a JSON report instead of human-readable text"),
        )
        .arg(
            Arg::new("field")
                .long("field")
                .value_name("SPEC")
                .global(true)
                .help("Reinterpret integer coefficients over a prime field, e.g. gf:5"),
        )
        .subcommand(
            Command::new("check")
                .about("Verify commutativity and the Jacobi identity")
                .arg(file("file")),
        )
        .subcommand(
            Command::new("derive")
                .about("Compute a basis and parametric form of the derivation algebra")
                .arg(file("file")),
        )
        .subcommand(
            Command::new("bracket-table")
                .about("Print the Lie structure constants of the derivation algebra")
                .arg(file("file")),
        )
        .subcommand(
            Command::new("sum")
                .about("Form the direct sum of two algebras as a new document")
                .arg(file("a"))
                .arg(Arg::new("b").value_name("FILE2").required(true))
                .arg(
                    Arg::new("output")
                        .short('o')
                        .long("output")
                        .value_name("OUT")
                        .help("Write the document here instead of stdout"),
                ),
        )
        .subcommand(
            Command::new("catalog")
                .about("List or show the built-in mock-Lie algebras of dimension at most 4")
                .arg(
                    Arg::new("action")
                        .value_parser(["list", "show"])
                        .default_value("list"),
                )
                .arg(
                    Arg::new("name")
                        .value_name("NAME")
                        .required_if_eq("action", "show"),
                ),
        )
        .subcommand(
            Command::new("verify-catalog")
                .about("Compare computed derivation algebras against the reference families"),
        )
        .subcommand(
            Command::new("fingerprint")
                .about("Print the isomorphism-invariant dimension fingerprint")
                .arg(file("file")),
        )
}

/// Runs the CLI against `args` (without the program name), writing to the
/// given streams, and returns the exit code.
pub fn run(args: &[String], out: &mut dyn Write, err: &mut dyn Write) -> i32 {
    let mut argv = Vec::with_capacity(args.len() + 1);
    argv.push(String::from("mocklie"));
    argv.extend_from_slice(args);
    let matches = match command().try_get_matches_from(argv) {
        Ok(matches) => matches,
        Err(e) => {
            let rendered = e.render().to_string();
            return match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => {
                    let _ = out.write_all(rendered.as_bytes());
                    EXIT_OK
                }
                _ => {
                    let _ = err.write_all(rendered.as_bytes());
                    EXIT_USAGE
                }
            };
        }
    };
    match dispatch(&matches, out) {
        Ok(code) => code,
        Err(failure) => {
            let _ = writeln!(err, "error: {}", failure.message);
            failure.code
        }
    }
}

fn dispatch(matches: &ArgMatches, out: &mut dyn Write) -> Result<i32, Failure> {
    let (name, sub) = matches.subcommand().expect("subcommand_required is set");
    let options = Options::from_matches(sub)?;
    match name {
        "check" => cmd_check(sub, &options, out),
        "derive" => cmd_derive(sub, &options, out),
        "bracket-table" => cmd_bracket_table(sub, &options, out),
        "sum" => cmd_sum(sub, &options, out),
        "catalog" => cmd_catalog(sub, &options, out),
        "verify-catalog" => cmd_verify_catalog(&options, out),
        "fingerprint" => cmd_fingerprint(sub, &options, out),
        _ => unreachable!("subcommand set is closed"),
    }
}

struct Options {
    json: bool,
    field: Option<FieldDescriptor>,
}

impl Options {
    fn from_matches(sub: &ArgMatches) -> Result<Options, Failure> {
        let field = match sub.get_one::<String>("field") {
            None => None,
            Some(spec) => Some(parse_field_spec(spec)?),
        };
        Ok(Options {
            json: sub.get_flag("json"),
            field,
        })
    }
}

fn parse_field_spec(spec: &str) -> Result<FieldDescriptor, Failure> {
    let p: u64 = spec
        .strip_prefix("gf:")
        .and_then(|digits| digits.parse().ok())
        .ok_or_else(|| {
            Failure::usage(format!(
                "invalid field '{spec}': expected gf:<p> with a prime p"
            ))
        })?;
    FieldDescriptor::prime_field(p)
        .map_err(|e| Failure::usage(format!("invalid field '{spec}': {e}")))
}

fn emit(out: &mut dyn Write, text: &str) -> Result<(), Failure> {
    out.write_all(text.as_bytes())
        .map_err(|e| Failure::usage(format!("cannot write output: {e}")))
}

/// Reads, parses, names (after the file stem), and optionally
/// reinterprets an algebra document.
fn load_algebra(path: &str, options: &Options) -> Result<Algebra, Failure> {
    let text = std::fs::read_to_string(path).map_err(|e| Failure::usage(format!("{path}: {e}")))?;
    let tensor = doc::parse(&text)
        .map_err(|e| Failure::usage(format!("{path}:{}:{}: {}", e.line, e.col, e.message)))?;
    let name = Path::new(path)
        .file_stem()
        .and_then(|stem| stem.to_str())
        .filter(|stem| !stem.is_empty())
        .unwrap_or("input");
    let algebra = Algebra::new(name, tensor).map_err(|e| Failure::usage(format!("{path}: {e}")))?;
    apply_field(algebra, options)
}

fn apply_field(algebra: Algebra, options: &Options) -> Result<Algebra, Failure> {
    match options.field {
        None => Ok(algebra),
        Some(field) => algebra.reinterpret(field).map_err(|e| {
            Failure::usage(format!(
                "cannot reinterpret '{}' over {field}: {e}",
                algebra.name()
            ))
        }),
    }
}

fn report_skeleton(algebra: &Algebra) -> Report {
    Report::new(algebra.name(), &algebra.field().to_string(), algebra.dim())
}

fn header(algebra: &Algebra) -> String {
    format!(
        "algebra: {}\nfield: {}\ndim: {}\n",
        algebra.name(),
        algebra.field(),
        algebra.dim()
    )
}

fn yes_no(flag: bool) -> &'static str {
    if flag {
        "yes"
    } else {
        "no"
    }
}

fn cmd_check(sub: &ArgMatches, options: &Options, out: &mut dyn Write) -> Result<i32, Failure> {
    let algebra = load_algebra(required(sub, "file"), options)?;
    let axioms = algebra.check_axioms();
    if options.json {
        let mut report = report_skeleton(&algebra);
        report.axioms = Some(report::axioms_section(&axioms));
        emit(out, &report::to_json(&report))?;
    } else {
        let mut text = header(&algebra);
        match axioms.commutativity_witness {
            Some((i, j, k)) => {
                let _ = writeln!(
                    text,
                    "commutative: no (first witness: pair ({i}, {j}), component {k})"
                );
            }
            None => text.push_str("commutative: yes\n"),
        }
        match axioms.jacobi_witness {
            Some((i, j, k, l)) => {
                let _ = writeln!(
                    text,
                    "jacobi: no (first witness: triple ({i}, {j}, {k}), component {l})"
                );
            }
            None => text.push_str("jacobi: yes\n"),
        }
        let _ = writeln!(text, "mock-lie: {}", yes_no(axioms.is_mock_lie()));
        emit(out, &text)?;
    }
    Ok(if axioms.is_mock_lie() {
        EXIT_OK
    } else {
        EXIT_AXIOM
    })
}

fn cmd_derive(sub: &ArgMatches, options: &Options, out: &mut dyn Write) -> Result<i32, Failure> {
    let algebra = load_algebra(required(sub, "file"), options)?;
    let space = derivation_basis(&algebra);
    let family = render_parametric(&space);
    if options.json {
        let mut report = report_skeleton(&algebra);
        report.der = Some(report::DerSection {
            dim: space.dim(),
            basis: Some(space.basis().iter().map(report::matrix_entries).collect()),
            parametric: Some(report::parametric_section(&family)),
            brackets: None,
        });
        emit(out, &report::to_json(&report))?;
    } else {
        let mut text = header(&algebra);
        let _ = writeln!(text, "der dim: {}", space.dim());
        if family.parameters().is_empty() {
            text.push_str("parameters: (none)\n");
        } else {
            let _ = writeln!(text, "parameters: {}", family.parameters().join(", "));
        }
        let _ = writeln!(text, "{family}");
        emit(out, &text)?;
    }
    Ok(EXIT_OK)
}

/// Renders a combination of basis derivations, e.g. `D2` or `2D1 - D3`.
fn render_bracket_value(terms: &[(usize, Scalar)]) -> String {
    let mut text = String::new();
    for (pos, (t, coeff)) in terms.iter().enumerate() {
        let negative = coeff.is_negative();
        if pos == 0 {
            if negative {
                text.push('-');
            }
        } else {
            text.push_str(if negative { " - " } else { " + " });
        }
        let magnitude = if negative {
            coeff.negated()
        } else {
            coeff.clone()
        };
        if !magnitude.is_one() {
            let rendered = magnitude.to_string();
            if rendered.contains('/') {
                let _ = write!(text, "({rendered})");
            } else {
                text.push_str(&rendered);
            }
        }
        let _ = write!(text, "D{t}");
    }
    text
}

/// `(left, right, nonzero coordinates)` of one bracket `[D_left, D_right]`.
type BracketRow = (usize, usize, Vec<(usize, Scalar)>);

fn bracket_rows(
    space: &DerivationSpace,
    tensor: &mock_lie::algebra::StructureTensor,
) -> Vec<BracketRow> {
    let dim = space.dim();
    let mut rows = Vec::new();
    for p in 1..=dim {
        for q in (p + 1)..=dim {
            let terms: Vec<(usize, Scalar)> = (1..=dim)
                .filter_map(|t| {
                    let c = tensor.coeff(p, q, t);
                    (!c.is_zero()).then_some((t, c))
                })
                .collect();
            if !terms.is_empty() {
                rows.push((p, q, terms));
            }
        }
    }
    rows
}

fn cmd_bracket_table(
    sub: &ArgMatches,
    options: &Options,
    out: &mut dyn Write,
) -> Result<i32, Failure> {
    let algebra = load_algebra(required(sub, "file"), options)?;
    let space = derivation_basis(&algebra);
    let tensor = der_structure_constants(&algebra)
        .map_err(|e| Failure::usage(format!("bracket table for '{}': {e}", algebra.name())))?;
    let rows = bracket_rows(&space, &tensor);
    if options.json {
        let mut report = report_skeleton(&algebra);
        report.der = Some(report::DerSection {
            dim: space.dim(),
            basis: None,
            parametric: None,
            brackets: Some(
                rows.iter()
                    .map(|(p, q, terms)| {
                        let mut coords = vec![String::from("0"); space.dim()];
                        for (t, coeff) in terms {
                            coords[t - 1] = coeff.to_string();
                        }
                        BracketEntry {
                            left: *p,
                            right: *q,
                            coords,
                        }
                    })
                    .collect(),
            ),
        });
        emit(out, &report::to_json(&report))?;
    } else {
        let mut text = header(&algebra);
        let _ = writeln!(text, "der dim: {}", space.dim());
        if rows.is_empty() {
            text.push_str("all brackets vanish\n");
        } else {
            for (p, q, terms) in &rows {
                let _ = writeln!(text, "[D{p}, D{q}] = {}", render_bracket_value(terms));
            }
        }
        emit(out, &text)?;
    }
    Ok(EXIT_OK)
}

fn cmd_sum(sub: &ArgMatches, options: &Options, out: &mut dyn Write) -> Result<i32, Failure> {
    let left = load_algebra(required(sub, "a"), options)?;
    let right = load_algebra(required(sub, "b"), options)?;
    let sum = left
        .direct_sum(&right)
        .map_err(|e| Failure::usage(format!("cannot form the direct sum: {e}")))?;
    let document = doc::serialize(sum.tensor());
    let output = sub.get_one::<String>("output");
    if let Some(path) = output {
        std::fs::write(path, &document).map_err(|e| Failure::usage(format!("{path}: {e}")))?;
    }
    if options.json {
        let mut report = report_skeleton(&sum);
        report.document = Some(document);
        emit(out, &report::to_json(&report))?;
    } else if let Some(path) = output {
        emit(out, &format!("wrote {path}\n"))?;
    } else {
        emit(out, &document)?;
    }
    Ok(EXIT_OK)
}

fn cmd_catalog(sub: &ArgMatches, options: &Options, out: &mut dyn Write) -> Result<i32, Failure> {
    match required(sub, "action") {
        "list" => {
            let entries = catalog();
            if options.json {
                let list = CatalogList {
                    format: 1,
                    entries: entries
                        .iter()
                        .map(|a| CatalogRow {
                            algebra: a.name().to_string(),
                            dim: a.dim(),
                        })
                        .collect(),
                };
                emit(out, &report::to_json(&list))?;
            } else {
                let width = entries.iter().map(|a| a.name().len()).max().unwrap_or(0);
                let mut text = String::new();
                for entry in &entries {
                    let _ = writeln!(text, "{:<width$}  dim {}", entry.name(), entry.dim());
                }
                emit(out, &text)?;
            }
            Ok(EXIT_OK)
        }
        "show" => {
            let name = required(sub, "name");
            let entry = catalog_entry(name).ok_or_else(|| {
                Failure::usage(format!(
                    "unknown catalog entry '{name}' (see 'mocklie catalog list')"
                ))
            })?;
            let entry = apply_field(entry, options)?;
            let document = doc::serialize(entry.tensor());
            if options.json {
                let mut report = report_skeleton(&entry);
                report.document = Some(document);
                emit(out, &report::to_json(&report))?;
            } else {
                emit(out, &document)?;
            }
            Ok(EXIT_OK)
        }
        _ => unreachable!("value_parser restricts the action"),
    }
}

fn indent_matrix(rendered: &str) -> String {
    rendered.lines().map(|line| format!("  {line}\n")).collect()
}

fn cmd_verify_catalog(options: &Options, out: &mut dyn Write) -> Result<i32, Failure> {
    if options.field.is_some() {
        return Err(Failure::usage(
            "verify-catalog always runs over the rationals; --field is not supported here",
        ));
    }
    let reports = verify_catalog();
    let all_equal = reports.iter().all(|r| r.spaces_equal);
    if options.json {
        let document = VerifyCatalogReport {
            format: 1,
            all_equal,
            entries: reports
                .iter()
                .map(|r| VerifyEntry {
                    algebra: r.catalog_name.clone(),
                    field: FieldDescriptor::Rationals.to_string(),
                    dim: catalog_entry(&r.catalog_name)
                        .expect("verified names come from the catalog")
                        .dim(),
                    verification: report::verification_section(r),
                })
                .collect(),
        };
        emit(out, &report::to_json(&document))?;
    } else {
        let mut text = String::new();
        let width = reports
            .iter()
            .map(|r| r.catalog_name.len())
            .max()
            .unwrap_or(0);
        for r in &reports {
            if r.spaces_equal {
                let _ = writeln!(
                    text,
                    "{:<width$}  EQUAL (dim {} = {})",
                    r.catalog_name, r.computed_dim, r.reference_dim
                );
            } else {
                let _ = writeln!(
                    text,
                    "{:<width$}  MISMATCH (computed dim {}, reference dim {})",
                    r.catalog_name, r.computed_dim, r.reference_dim
                );
                if let Some((side, witness)) = &r.discrepancy {
                    let side = match side {
                        mock_lie::der::DiscrepancySide::ComputedOnly => "computed space only",
                        mock_lie::der::DiscrepancySide::ReferenceOnly => "reference family only",
                    };
                    let _ = writeln!(text, "  matrix in the {side}:");
                    text.push_str(&indent_matrix(&witness.to_string()));
                }
            }
        }
        text.push_str(&summary_line(&reports));
        emit(out, &text)?;
    }
    Ok(if all_equal { EXIT_OK } else { EXIT_MISMATCH })
}

fn summary_line(reports: &[VerificationReport]) -> String {
    let failed = reports.iter().filter(|r| !r.spaces_equal).count();
    if failed == 0 {
        format!("all {} entries verified\n", reports.len())
    } else {
        format!("{failed} of {} entries failed\n", reports.len())
    }
}

fn cmd_fingerprint(
    sub: &ArgMatches,
    options: &Options,
    out: &mut dyn Write,
) -> Result<i32, Failure> {
    let algebra = load_algebra(required(sub, "file"), options)?;
    let record = algebra.invariants();
    if options.json {
        let mut report = report_skeleton(&algebra);
        report.fingerprint = Some(report::fingerprint_section(&record));
        emit(out, &report::to_json(&report))?;
    } else {
        let mut text = header(&algebra);
        let _ = writeln!(text, "dim square: {}", record.dim_square);
        let _ = writeln!(text, "dim annihilator: {}", record.dim_annihilator);
        let _ = writeln!(text, "dim der: {}", record.dim_der);
        emit(out, &text)?;
    }
    Ok(EXIT_OK)
}

fn required<'a>(sub: &'a ArgMatches, name: &str) -> &'a str {
    sub.get_one::<String>(name)
        .expect("argument is required")
        .as_str()
}

#[cfg(test)]
mod tests {
    use super::*;

    /// Runs the CLI against string arguments, capturing output.
    fn capture(args: &[&str]) -> (i32, String, String) {
        let argv: Vec<String> = args.iter().map(|s| s.to_string()).collect();
        let mut out = Vec::new();
        let mut err = Vec::new();
        let code = run(&argv, &mut out, &mut err);
        (
            code,
            String::from_utf8(out).expect("stdout is UTF-8"),
            String::from_utf8(err).expect("stderr is UTF-8"),
        )
    }

    #[test]
    fn help_goes_to_stdout_with_exit_zero() {
        let (code, out, err) = capture(&["--help"]);
        assert_eq!(code, 0);
        assert!(out.contains("verify-catalog"));
        assert!(err.is_empty());
    }

    #[test]
    fn unknown_subcommand_is_a_usage_error() {
        let (code, out, err) = capture(&["frobnicate"]);
        assert_eq!(code, 2);
        assert!(out.is_empty());
        assert!(err.contains("Usage") || err.contains("usage"));
    }

    #[test]
    fn missing_file_is_reported_with_its_path() {
        let (code, _, err) = capture(&["check", "/nonexistent/algebra.txt"]);
        assert_eq!(code, 2);
        assert!(err.starts_with("error: /nonexistent/algebra.txt:"));
    }

    #[test]
    fn field_spec_must_name_a_prime() {
        let (code, _, err) = capture(&["--field", "gf:6", "catalog", "list"]);
        assert_eq!(code, 2);
        assert!(err.contains("6"));
        let (code, _, err) = capture(&["--field", "real", "catalog", "list"]);
        assert_eq!(code, 2);
        assert!(err.contains("gf:<p>"));
    }

    #[test]
    fn catalog_list_has_twelve_rows() {
        let (code, out, _) = capture(&["catalog", "list"]);
        assert_eq!(code, 0);
        assert_eq!(out.lines().count(), 12);
        assert!(out.contains("A_{2,4}"));
    }

    #[test]
    fn catalog_show_round_trips_through_the_parser() {
        let (code, out, _) = capture(&["catalog", "show", "A_{1,4}"]);
        assert_eq!(code, 0);
        let tensor = crate::doc::parse(&out).expect("shown document parses");
        let entry = catalog_entry("A_{1,4}").unwrap();
        assert_eq!(&tensor, entry.tensor());
    }

    #[test]
    fn catalog_show_requires_a_name() {
        let (code, _, _) = capture(&["catalog", "show"]);
        assert_eq!(code, 2);
    }

    #[test]
    fn unknown_catalog_entry_is_a_usage_error() {
        let (code, _, err) = capture(&["catalog", "show", "A_{9,9}"]);
        assert_eq!(code, 2);
        assert!(err.contains("A_{9,9}"));
    }

    #[test]
    fn verify_catalog_rejects_field_override() {
        let (code, _, err) = capture(&["verify-catalog", "--field", "gf:5"]);
        assert_eq!(code, 2);
        assert!(err.contains("rationals"));
    }

    #[test]
    fn verify_catalog_reports_all_entries_equal() {
        let (code, out, _) = capture(&["verify-catalog"]);
        assert_eq!(code, 0);
        assert_eq!(out.matches("EQUAL").count(), 8);
        assert!(out.contains("all 8 entries verified"));
    }

    #[test]
    fn bracket_rendering_uses_sign_folding() {
        let terms = vec![
            (1, Scalar::from_integer(2, FieldDescriptor::Rationals)),
            (3, Scalar::from_integer(-1, FieldDescriptor::Rationals)),
        ];
        assert_eq!(render_bracket_value(&terms), "2D1 - D3");
        let half = vec![(2, Scalar::rational(1, 2).unwrap())];
        assert_eq!(render_bracket_value(&half), "(1/2)D2");
        let lead = vec![(1, Scalar::from_integer(-3, FieldDescriptor::Rationals))];
        assert_eq!(render_bracket_value(&lead), "-3D1");
        // residues have no sign; they render as canonical representatives
        let residue = vec![(1, Scalar::residue(6, 7))];
        assert_eq!(render_bracket_value(&residue), "6D1");
    }
}
