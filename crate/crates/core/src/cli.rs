//! The `cds` command line.
//!
//! Exit codes: 0 on success, 1 when a well-formed input leads to a domain
//! failure (total conflict, a violated inequality, a failed verification),
//! 2 when the input cannot be read or parsed.

use std::ffi::OsString;
use std::io::Write;
use std::path::{Path, PathBuf};
use std::sync::Arc;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::{json, Map, Value};

use crate::combine::combine_steps;
use crate::context::{parse_cxt, parse_json_context, resolve_key, ContextDocument, FormalContext};
use crate::error::{Error, Result};
use crate::evidence::powerset::{format_subset, SetTable, Subset};
use crate::evidence::{bel, pl, MassFunction};
use crate::golden::{run_case, Case, CaseReport, PRINTED_DIGITS};
use crate::lattice::{ConceptId, ConceptLattice};
use crate::limits::Limits;
use crate::oracle::{
    check_belief_axioms_set, check_plausibility_axioms_set, inner_measure_table,
    outer_measure_table, AxiomReport,
};
use crate::probspace::{scalar_string, space_from_value};
use crate::rational::{format_exact, parse_rational, Rational};
use crate::report::{Cell, NumberStyle, Table};
use crate::represent::{verify_representation_with, Construction, VerificationReport};

#[derive(Parser, Debug)]
#[command(
    name = "cds",
    version,
    about = "Belief functions and evidence combination on concept lattices"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Print the concepts and cover relation of a context (.cxt or .json)
    Lattice {
        input: PathBuf,
        /// Emit JSON instead of text
        #[arg(long)]
        json: bool,
    },
    /// Belief of every concept under each mass function of a document
    Bel(EvalArgs),
    /// Plausibility of every concept under each mass function of a document
    Pl(EvalArgs),
    /// Combine mass functions with Dempster's rule
    Combine(CombineArgs),
    /// Check bel and pl against the inner and outer measures of a constructed probability space
    VerifyRepresentation(VerifyArgs),
    /// Check the belief or plausibility inequalities on a table over a powerset
    Check(CheckArgs),
    /// Recompute the worked movie and music examples
    Examples(ExamplesArgs),
}

#[derive(Args, Debug, Clone, Copy)]
pub struct NumberArgs {
    /// Print exact rationals (p/q)
    #[arg(long)]
    pub exact: bool,
    /// Decimals when not exact
    #[arg(long, default_value_t = 2, value_parser = clap::value_parser!(u32).range(0..=9))]
    pub round: u32,
}

impl NumberArgs {
    fn style(self) -> NumberStyle {
        if self.exact {
            NumberStyle::Exact
        } else {
            NumberStyle::Rounded(self.round)
        }
    }
}

#[derive(ValueEnum, Debug, Clone, Copy, PartialEq, Eq)]
pub enum Format {
    Text,
    Csv,
    Json,
}

#[derive(ValueEnum, Debug, Clone, Copy, PartialEq, Eq)]
pub enum ReportFormat {
    Text,
    Json,
}

#[derive(ValueEnum, Debug, Clone, Copy, PartialEq, Eq)]
pub enum ConstructionArg {
    Algebraic,
    Frame,
    Both,
}

#[derive(ValueEnum, Debug, Clone, Copy, PartialEq, Eq)]
pub enum CaseArg {
    #[value(name = "movies-1")]
    Movies1,
    #[value(name = "movies-2")]
    Movies2,
    #[value(name = "movies-3")]
    Movies3,
    Music,
}

impl From<CaseArg> for Case {
    fn from(c: CaseArg) -> Self {
        match c {
            CaseArg::Movies1 => Case::Movies1,
            CaseArg::Movies2 => Case::Movies2,
            CaseArg::Movies3 => Case::Movies3,
            CaseArg::Music => Case::Music,
        }
    }
}

#[derive(Args, Debug)]
pub struct EvalArgs {
    /// JSON context with masses
    pub input: PathBuf,
    /// Only this mass function
    #[arg(long)]
    pub mass: Option<String>,
    #[arg(long, value_enum, default_value_t = Format::Text)]
    pub format: Format,
    #[command(flatten)]
    pub numbers: NumberArgs,
}

#[derive(Args, Debug)]
pub struct CombineArgs {
    /// JSON context with at least two masses
    pub input: PathBuf,
    /// Masses to combine, left to right (default: all, in document order)
    #[arg(long, value_delimiter = ',')]
    pub order: Vec<String>,
    #[arg(long, value_enum, default_value_t = Format::Text)]
    pub format: Format,
    #[command(flatten)]
    pub numbers: NumberArgs,
}

#[derive(Args, Debug)]
pub struct VerifyArgs {
    /// JSON context with masses
    pub input: PathBuf,
    /// Only this mass function
    #[arg(long)]
    pub mass: Option<String>,
    #[arg(long, value_enum, default_value_t = ConstructionArg::Algebraic)]
    pub construction: ConstructionArg,
    #[arg(long, value_enum, default_value_t = ReportFormat::Text)]
    pub format: ReportFormat,
    #[command(flatten)]
    pub numbers: NumberArgs,
}

#[derive(Args, Debug)]
pub struct CheckArgs {
    /// A table `{"function": "bel"|"pl", "size": n, "values": ...}` or a
    /// partition space `{"carrier", "blocks", "mu"}`
    pub input: PathBuf,
    /// Longest tuple to check
    #[arg(long, default_value_t = 3, value_parser = clap::value_parser!(u64).range(1..=3))]
    pub n_max: u64,
    #[arg(long, value_enum, default_value_t = ReportFormat::Text)]
    pub format: ReportFormat,
}

#[derive(Args, Debug)]
pub struct ExamplesArgs {
    /// Which case (default: all)
    #[arg(long, value_enum)]
    pub case: Option<CaseArg>,
    #[arg(long, value_enum, default_value_t = Format::Text)]
    pub format: Format,
    #[command(flatten)]
    pub numbers: NumberArgs,
}

/// Runs the command line on the process's arguments and standard streams.
pub fn run<I, T>(argv: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let stdout = std::io::stdout();
    let stderr = std::io::stderr();
    run_with(argv, &mut stdout.lock(), &mut stderr.lock())
}

/// Runs the command line with explicit output streams; returns the exit code.
pub fn run_with<I, T>(argv: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(cli) => cli,
        Err(e) => {
            let text = e.render().to_string();
            let code = e.exit_code();
            let _ = if e.use_stderr() {
                err.write_all(text.as_bytes())
            } else {
                out.write_all(text.as_bytes())
            };
            return if code == 0 { 0 } else { 2 };
        }
    };
    match execute(cli.command, out, err) {
        Ok(code) => code,
        Err(Error::Io(e)) if e.kind() == std::io::ErrorKind::BrokenPipe => 0,
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            if e.is_input_error() {
                2
            } else {
                1
            }
        }
    }
}

fn execute(command: Command, out: &mut dyn Write, err: &mut dyn Write) -> Result<i32> {
    let limits = Limits::from_env()?;
    match command {
        Command::Lattice { input, json } => lattice_command(&input, json, &limits, out),
        Command::Bel(args) => eval_command(&args, Measure::Bel, &limits, out),
        Command::Pl(args) => eval_command(&args, Measure::Pl, &limits, out),
        Command::Combine(args) => combine_command(&args, &limits, out),
        Command::VerifyRepresentation(args) => verify_command(&args, &limits, out, err),
        Command::Check(args) => check_command(&args, out, err),
        Command::Examples(args) => examples_command(&args, out),
    }
}

fn read_input(path: &Path) -> Result<String> {
    std::fs::read_to_string(path)
        .map_err(|e| Error::Document(format!("cannot read {}: {e}", path.display())))
}

fn load_document(path: &Path, limits: &Limits) -> Result<(ContextDocument, Arc<ConceptLattice>)> {
    let text = read_input(path)?;
    if is_cxt(path, &text) {
        return Err(Error::Document(format!(
            "{} is a CXT file; mass functions need a JSON document",
            path.display()
        )));
    }
    let doc = parse_json_context(&text)?;
    let lattice = doc.build_lattice_with(limits)?;
    Ok((doc, lattice))
}

fn is_cxt(path: &Path, text: &str) -> bool {
    match path.extension().and_then(|e| e.to_str()) {
        Some(ext) if ext.eq_ignore_ascii_case("cxt") => true,
        Some(ext) if ext.eq_ignore_ascii_case("json") => false,
        _ => !text.trim_start().starts_with('{'),
    }
}

fn selected_masses(
    doc: &ContextDocument,
    lattice: &Arc<ConceptLattice>,
    only: Option<&str>,
) -> Result<Vec<(String, MassFunction)>> {
    match only {
        Some(name) => Ok(vec![(name.to_string(), doc.resolve_named(lattice, name)?)]),
        None => doc
            .masses
            .iter()
            .map(|spec| Ok((spec.name.clone(), spec.resolve(lattice)?)))
            .collect(),
    }
}

fn write_pretty(out: &mut dyn Write, value: &Value) -> Result<()> {
    let text = serde_json::to_string_pretty(value)?;
    writeln!(out, "{text}")?;
    Ok(())
}

fn names(
    context: &FormalContext,
    set: impl Iterator<Item = usize>,
    attributes: bool,
) -> Vec<String> {
    let all = if attributes {
        context.attributes()
    } else {
        context.objects()
    };
    set.map(|i| all[i].clone()).collect()
}

/// A key that resolves back to `c` in a document built from `lattice`.
fn concept_key(lattice: &ConceptLattice, c: ConceptId) -> String {
    let label = lattice.label(c);
    if resolve_key(lattice, "", &label).ok() == Some(c) {
        label
    } else {
        lattice.context().format_objects(lattice.extent(c))
    }
}

fn mass_json(
    lattice: &ConceptLattice,
    values: impl Fn(ConceptId) -> Rational,
    support_only: bool,
) -> Value {
    let mut map = Map::new();
    for c in lattice.ids() {
        let v = values(c);
        if support_only && num_traits::Zero::is_zero(&v) {
            continue;
        }
        map.insert(concept_key(lattice, c), Value::String(format_exact(&v)));
    }
    Value::Object(map)
}

/// The context part of a document: objects, attributes, incidence, labels.
fn document_json(lattice: &ConceptLattice) -> Map<String, Value> {
    let ctx = lattice.context();
    let mut map = Map::new();
    map.insert("objects".into(), json!(ctx.objects()));
    map.insert("attributes".into(), json!(ctx.attributes()));
    let incidence: Vec<Value> = ctx
        .incidence()
        .map(|(g, m)| json!([ctx.objects()[g], ctx.attributes()[m]]))
        .collect();
    map.insert("incidence".into(), Value::Array(incidence));
    let mut labels = Map::new();
    for c in lattice.ids() {
        if let Some(label) = lattice.explicit_label(c) {
            labels.insert(
                label.to_string(),
                json!(names(ctx, lattice.extent(c).iter(), false)),
            );
        }
    }
    map.insert("labels".into(), Value::Object(labels));
    map
}

fn lattice_command(
    input: &Path,
    as_json: bool,
    limits: &Limits,
    out: &mut dyn Write,
) -> Result<i32> {
    let text = read_input(input)?;
    let lattice = if is_cxt(input, &text) {
        Arc::new(ConceptLattice::from_context_with(
            parse_cxt(&text)?,
            limits,
        )?)
    } else {
        parse_json_context(&text)?.build_lattice_with(limits)?
    };
    let ctx = lattice.context();
    if as_json {
        let mut doc = document_json(&lattice);
        let concepts: Vec<Value> = lattice
            .ids()
            .map(|c| {
                json!({
                    "id": c.index(),
                    "label": lattice.label(c),
                    "extent": names(ctx, lattice.extent(c).iter(), false),
                    "intent": names(ctx, lattice.intent(c).iter(), true),
                })
            })
            .collect();
        doc.insert("concepts".into(), Value::Array(concepts));
        let covers: Vec<Value> = lattice
            .covers()
            .into_iter()
            .map(|(lower, upper)| json!([lower.index(), upper.index()]))
            .collect();
        doc.insert("covers".into(), Value::Array(covers));
        write_pretty(out, &Value::Object(doc))?;
    } else {
        for c in lattice.ids() {
            writeln!(out, "{}: {}", lattice.label(c), lattice.describe(c))?;
        }
        writeln!(out, "covers:")?;
        for (lower, upper) in lattice.covers() {
            writeln!(out, "{} < {}", lattice.label(lower), lattice.label(upper))?;
        }
    }
    Ok(0)
}

#[derive(Clone, Copy)]
enum Measure {
    Bel,
    Pl,
}

impl Measure {
    fn name(self) -> &'static str {
        match self {
            Measure::Bel => "bel",
            Measure::Pl => "pl",
        }
    }

    fn eval(self, m: &MassFunction, c: ConceptId) -> Rational {
        match self {
            Measure::Bel => bel(m, c),
            Measure::Pl => pl(m, c),
        }
    }
}

fn render(out: &mut dyn Write, tables: &[Table], format: Format, style: NumberStyle) -> Result<()> {
    for (i, table) in tables.iter().enumerate() {
        if i > 0 {
            writeln!(out)?;
        }
        match format {
            Format::Text => write!(out, "{}", table.render_text(style))?,
            Format::Csv => write!(out, "{}", table.render_csv(style))?,
            Format::Json => unreachable!("json is rendered by the caller"),
        }
    }
    Ok(())
}

fn eval_command(
    args: &EvalArgs,
    measure: Measure,
    limits: &Limits,
    out: &mut dyn Write,
) -> Result<i32> {
    let (doc, lattice) = load_document(&args.input, limits)?;
    let masses = selected_masses(&doc, &lattice, args.mass.as_deref())?;
    if masses.is_empty() {
        return Err(Error::Document(
            "the document defines no mass functions".into(),
        ));
    }
    if args.format == Format::Json {
        let mut json_doc = document_json(&lattice);
        let mut mass_map = Map::new();
        let mut values = Map::new();
        for (name, m) in &masses {
            mass_map.insert(
                name.clone(),
                mass_json(&lattice, |c| m.value(c).clone(), true),
            );
            values.insert(
                name.clone(),
                mass_json(&lattice, |c| measure.eval(m, c), false),
            );
        }
        json_doc.insert("masses".into(), Value::Object(mass_map));
        json_doc.insert(measure.name().into(), Value::Object(values));
        write_pretty(out, &Value::Object(json_doc))?;
        return Ok(0);
    }
    let mut table = Table::new(
        std::iter::once("concept".to_string()).chain(masses.iter().map(|(n, _)| n.clone())),
    )
    .titled(measure.name());
    for c in lattice.ids() {
        let mut row = vec![Cell::text(lattice.label(c))];
        row.extend(masses.iter().map(|(_, m)| Cell::value(measure.eval(m, c))));
        table.push(row);
    }
    if args.format == Format::Csv {
        table.title = None;
    }
    render(out, &[table], args.format, args.numbers.style())?;
    Ok(0)
}

fn combine_command(args: &CombineArgs, limits: &Limits, out: &mut dyn Write) -> Result<i32> {
    let (doc, lattice) = load_document(&args.input, limits)?;
    let order: Vec<String> = if args.order.is_empty() {
        doc.mass_names().into_iter().map(str::to_string).collect()
    } else {
        args.order.clone()
    };
    if order.len() < 2 {
        return Err(Error::Document(format!(
            "combination needs at least two masses, got {}",
            order.len()
        )));
    }
    let masses: Vec<MassFunction> = order
        .iter()
        .map(|name| doc.resolve_named(&lattice, name))
        .collect::<Result<_>>()?;
    let steps = combine_steps(&masses)?;
    let combined = &steps.last().expect("at least one step").result;
    let name = order.join("⊕");

    if args.format == Format::Json {
        let mut json_doc = document_json(&lattice);
        let mut mass_map = Map::new();
        mass_map.insert(
            name.clone(),
            mass_json(&lattice, |c| combined.value(c).clone(), true),
        );
        json_doc.insert("masses".into(), Value::Object(mass_map));
        json_doc.insert("order".into(), json!(order));
        json_doc.insert(
            "bel".into(),
            mass_json(&lattice, |c| bel(combined, c), false),
        );
        json_doc.insert("pl".into(), mass_json(&lattice, |c| pl(combined, c), false));
        let conflicts: Vec<String> = steps.iter().map(|s| format_exact(&s.conflict)).collect();
        json_doc.insert("conflicts".into(), json!(conflicts));
        write_pretty(out, &Value::Object(json_doc))?;
        return Ok(0);
    }

    let style = args.numbers.style();
    let mut table = Table::new(["concept", "m", "bel", "pl"]);
    if args.format == Format::Text {
        table.title = Some(order.join(" ⊕ "));
    }
    for c in lattice.ids() {
        table.push(vec![
            Cell::text(lattice.label(c)),
            Cell::value(combined.value(c).clone()),
            Cell::value(bel(combined, c)),
            Cell::value(pl(combined, c)),
        ]);
    }
    if args.format == Format::Text {
        for (i, step) in steps.iter().enumerate() {
            table.notes.push(format!(
                "conflict at step {} ({} with {}): {}",
                i + 1,
                order[..=i].join(" ⊕ "),
                order[i + 1],
                style.format(&step.conflict)
            ));
        }
    }
    render(out, &[table], args.format, style)?;
    Ok(0)
}

fn verify_command(
    args: &VerifyArgs,
    limits: &Limits,
    out: &mut dyn Write,
    err: &mut dyn Write,
) -> Result<i32> {
    let (doc, lattice) = load_document(&args.input, limits)?;
    let masses = selected_masses(&doc, &lattice, args.mass.as_deref())?;
    if masses.is_empty() {
        return Err(Error::Document(
            "the document defines no mass functions".into(),
        ));
    }
    let constructions: &[Construction] = match args.construction {
        ConstructionArg::Algebraic => &[Construction::Algebraic],
        ConstructionArg::Frame => &[Construction::Frame],
        ConstructionArg::Both => &[Construction::Algebraic, Construction::Frame],
    };
    let mut reports: Vec<(String, VerificationReport)> = Vec::new();
    for (name, m) in &masses {
        for &construction in constructions {
            reports.push((
                name.clone(),
                verify_representation_with(m, construction, limits)?,
            ));
        }
    }
    let passed = reports.iter().all(|(_, r)| r.passed());

    match args.format {
        ReportFormat::Json => {
            let items: Vec<Value> = reports
                .iter()
                .map(|(name, r)| {
                    let rows: Vec<Value> = r
                        .rows
                        .iter()
                        .map(|row| {
                            json!({
                                "concept": row.label,
                                "bel": format_exact(&row.bel),
                                "inner": format_exact(&row.inner),
                                "pl": format_exact(&row.pl),
                                "outer": format_exact(&row.outer),
                                "passed": row.passed(),
                            })
                        })
                        .collect();
                    json!({
                        "mass": name,
                        "construction": r.construction,
                        "normalized": r.normalized,
                        "passed": r.passed(),
                        "rows": rows,
                        "checks": r.checks,
                    })
                })
                .collect();
            write_pretty(out, &json!({ "passed": passed, "reports": items }))?;
        }
        ReportFormat::Text => {
            let style = args.numbers.style();
            for (i, (name, report)) in reports.iter().enumerate() {
                if i > 0 {
                    writeln!(out)?;
                }
                let mut table = Table::new(["concept", "bel", "inner", "pl", "outer", "result"])
                    .titled(format!("{name}, {} construction", report.construction));
                for row in &report.rows {
                    table.push(vec![
                        Cell::text(row.label.clone()),
                        Cell::value(row.bel.clone()),
                        Cell::value(row.inner.clone()),
                        Cell::value(row.pl.clone()),
                        Cell::value(row.outer.clone()),
                        Cell::text(if row.passed() { "pass" } else { "FAIL" }),
                    ]);
                }
                if report.normalized {
                    table
                        .notes
                        .push("an attribute held by no object was added so that the bottom extent is empty".into());
                }
                write!(out, "{}", table.render_text(style))?;
                for check in &report.checks {
                    match &check.witness {
                        None => writeln!(out, "check pass: {}", check.name)?,
                        Some(w) => writeln!(out, "check FAIL: {} ({w})", check.name)?,
                    }
                }
            }
        }
    }
    if passed {
        Ok(0)
    } else {
        writeln!(err, "verification failed")?;
        Ok(1)
    }
}

/// What a `check` input asks for.
enum CheckInput {
    Table { function: Measure, table: SetTable },
    Space { inner: SetTable, outer: SetTable },
}

fn parse_check_input(text: &str) -> Result<CheckInput> {
    let value: Value = serde_json::from_str(text)?;
    if value.get("carrier").is_some() {
        let space = space_from_value(&value)?;
        if space.carrier_size() > crate::oracle::AXIOM_MAX_CARRIER {
            return Err(Error::Capacity {
                what: "axiom-check carrier",
                limit: crate::oracle::AXIOM_MAX_CARRIER,
                actual: space.carrier_size(),
            });
        }
        return Ok(CheckInput::Space {
            inner: inner_measure_table(&space),
            outer: outer_measure_table(&space),
        });
    }
    let function = match value
        .get("function")
        .and_then(Value::as_str)
        .unwrap_or("bel")
    {
        "bel" => Measure::Bel,
        "pl" => Measure::Pl,
        other => {
            return Err(Error::Document(format!(
                "unknown function {other:?}; use bel or pl"
            )))
        }
    };
    let size = value
        .get("size")
        .and_then(Value::as_u64)
        .ok_or_else(|| Error::Document("missing integer `size`".into()))? as usize;
    if size > crate::oracle::AXIOM_MAX_CARRIER {
        return Err(Error::Capacity {
            what: "axiom-check carrier",
            limit: crate::oracle::AXIOM_MAX_CARRIER,
            actual: size,
        });
    }
    let count = 1usize << size;
    let values: Vec<Rational> = match value.get("values") {
        Some(Value::Array(items)) => items
            .iter()
            .map(|v| parse_rational(&scalar_string(v)?))
            .collect::<Result<_>>()?,
        Some(Value::Object(map)) => {
            let mut values: Vec<Option<Rational>> = vec![None; count];
            for (key, v) in map {
                let set = parse_subset(key, size)?;
                values[set as usize] = Some(parse_rational(&scalar_string(v)?)?);
            }
            values
                .into_iter()
                .enumerate()
                .map(|(x, v)| {
                    v.ok_or_else(|| {
                        Error::Document(format!("no value for {}", format_subset(x as Subset)))
                    })
                })
                .collect::<Result<_>>()?
        }
        _ => {
            return Err(Error::Document(
                "missing `values` (array by mask, or object by subset)".into(),
            ))
        }
    };
    if values.len() != count {
        return Err(Error::Document(format!(
            "{} values for the {count} subsets of a {size}-element set",
            values.len()
        )));
    }
    Ok(CheckInput::Table {
        function,
        table: SetTable::new(size, values)?,
    })
}

/// `{0,2}` → mask.
fn parse_subset(key: &str, size: usize) -> Result<Subset> {
    let inner = key
        .trim()
        .strip_prefix('{')
        .and_then(|k| k.strip_suffix('}'))
        .ok_or_else(|| Error::Document(format!("expected a subset like {{0,2}}, got {key:?}")))?;
    let mut set: Subset = 0;
    for item in inner.split(',').map(str::trim).filter(|s| !s.is_empty()) {
        let i: usize = item
            .parse()
            .map_err(|_| Error::Document(format!("bad element {item:?} in {key:?}")))?;
        if i >= size {
            return Err(Error::Document(format!(
                "element {i} outside a {size}-element set"
            )));
        }
        set |= 1 << i;
    }
    Ok(set)
}

fn check_command(args: &CheckArgs, out: &mut dyn Write, err: &mut dyn Write) -> Result<i32> {
    let input = parse_check_input(&read_input(&args.input)?)?;
    let n_max = args.n_max as usize;
    let mut results: Vec<(&str, AxiomReport)> = Vec::new();
    let mut duality = None;
    match &input {
        CheckInput::Table { function, table } => match function {
            Measure::Bel => results.push(("belief", check_belief_axioms_set(table, n_max)?)),
            Measure::Pl => {
                results.push(("plausibility", check_plausibility_axioms_set(table, n_max)?))
            }
        },
        CheckInput::Space { inner, outer } => {
            results.push((
                "belief (inner measure)",
                check_belief_axioms_set(inner, n_max)?,
            ));
            results.push((
                "plausibility (outer measure)",
                check_plausibility_axioms_set(outer, n_max)?,
            ));
            let full = inner.full();
            duality = Some(
                (0..=full)
                    .find(|&y| *outer.get(y) != crate::rational::one() - inner.get(full & !y))
                    .map(format_subset),
            );
        }
    }
    let passed = results.iter().all(|(_, r)| r.passed()) && !matches!(duality, Some(Some(_)));

    match args.format {
        ReportFormat::Json => {
            let items: Vec<Value> = results
                .iter()
                .map(|(name, r)| json!({ "inequality": name, "n_max": n_max, "report": r }))
                .collect();
            let mut doc = json!({ "passed": passed, "checks": items });
            if let Some(d) = &duality {
                doc["duality_violation"] = json!(d);
            }
            write_pretty(out, &doc)?;
        }
        ReportFormat::Text => {
            for (name, report) in &results {
                match &report.first_violation {
                    None => writeln!(
                        out,
                        "{name} inequalities, n ≤ {n_max}: pass ({} tuples)",
                        report.checked_tuples
                    )?,
                    Some(v) => writeln!(
                        out,
                        "{name} inequalities, n ≤ {n_max}: violated at ({}): lhs {} rhs {}",
                        v.sets.join(", "),
                        v.lhs,
                        v.rhs
                    )?,
                }
            }
            match &duality {
                Some(None) => writeln!(out, "duality outer(Y) = 1 - inner(S \\ Y): pass")?,
                Some(Some(y)) => {
                    writeln!(out, "duality outer(Y) = 1 - inner(S \\ Y): fails at {y}")?
                }
                None => {}
            }
        }
    }
    if passed {
        Ok(0)
    } else {
        writeln!(err, "inequality violated")?;
        Ok(1)
    }
}

fn examples_command(args: &ExamplesArgs, out: &mut dyn Write) -> Result<i32> {
    let cases: Vec<Case> = match args.case {
        Some(c) => vec![c.into()],
        None => Case::ALL.to_vec(),
    };
    let reports: Vec<CaseReport> = cases.into_iter().map(run_case).collect::<Result<_>>()?;
    let style = args.numbers.style();
    match args.format {
        Format::Json => {
            let items: Vec<Value> = reports
                .iter()
                .map(|r| {
                    let annotations: Vec<Value> = r
                        .annotations()
                        .iter()
                        .map(|a| {
                            json!({
                                "table": a.table,
                                "row": a.row,
                                "column": a.column,
                                "computed": format_exact(&a.cell.computed),
                                "rounded": NumberStyle::Rounded(PRINTED_DIGITS).format(&a.cell.computed),
                                "printed": a.cell.printed,
                            })
                        })
                        .collect();
                    let tables: Vec<Value> = r.to_tables().iter().map(|t| t.to_json(NumberStyle::Exact)).collect();
                    let conflicts: Vec<String> = r.conflicts.iter().map(format_exact).collect();
                    json!({
                        "case": r.case.id(),
                        "title": r.case.title(),
                        "tables": tables,
                        "conflicts": conflicts,
                        "annotations": annotations,
                    })
                })
                .collect();
            write_pretty(out, &json!({ "cases": items }))?;
        }
        Format::Csv => {
            let mut table = Table::new([
                "case", "table", "row", "column", "computed", "printed", "matches",
            ]);
            for r in &reports {
                for golden in &r.tables {
                    for (row, cells) in &golden.rows {
                        for (column, cell) in golden.columns.iter().zip(cells) {
                            table.push(vec![
                                Cell::text(r.case.id()),
                                Cell::text(golden.title.clone()),
                                Cell::text(row.clone()),
                                Cell::text(column.clone()),
                                Cell::value(cell.computed.clone()),
                                Cell::text(cell.printed.clone()),
                                Cell::text(if cell.matches() { "yes" } else { "no" }),
                            ]);
                        }
                    }
                }
            }
            render(out, &[table], Format::Csv, style)?;
        }
        Format::Text => {
            for (i, r) in reports.iter().enumerate() {
                if i > 0 {
                    writeln!(out)?;
                }
                writeln!(out, "== {} ({}) ==", r.case.title(), r.case.id())?;
                render(out, &r.to_tables(), Format::Text, style)?;
            }
        }
    }
    Ok(0)
}
