use std::fmt::Write as _;
use std::path::Path;

use gamma2_core::algebra::{epsilon0, radial_operator, radial_power_trace};
use gamma2_core::lucas::lucas_triangle;
use gamma2_core::rep::{parse_tuples, represent, validate_tuples, Distinctness, RepConfig, Violation};
use gamma2_core::words::{max_generator_index, GroupWord};
use serde_json::{json, Value};

use crate::report::{config_json, matrix_json, scalar_json, CliError, CliReport};

/// What a command produced: the structured report and its plain-text rendering.
pub struct Outcome {
    pub report: CliReport,
    pub text: String,
}

pub struct LoadedConfig {
    pub cfg: RepConfig,
    /// Coordinate collisions tolerated under the relaxed policy.
    pub warnings: Vec<Violation>,
}

pub fn load_config(path: &Path, strict: bool) -> Result<LoadedConfig, CliError> {
    let text = std::fs::read_to_string(path)
        .map_err(|e| CliError::usage(format!("cannot read {}: {e}", path.display())))?;
    let tuples = parse_tuples(&text)?;
    let violations = validate_tuples(&tuples);
    let (warnings, hard): (Vec<_>, Vec<_>) =
        violations.into_iter().partition(|v| v.is_collision() && !strict);
    if !hard.is_empty() {
        return Err(CliError::invalid_config(&hard));
    }
    let cfg = RepConfig::with_policy(tuples, Distinctness::Relaxed)?;
    Ok(LoadedConfig { cfg, warnings })
}

fn warnings_json(w: &[Violation]) -> Value {
    Value::Array(w.iter().map(|v| Value::String(v.to_string())).collect())
}

pub fn repr(config: &Path, word: &str, strict: bool, approx: bool) -> Result<Outcome, CliError> {
    let LoadedConfig { cfg, warnings } = load_config(config, strict)?;
    let w = GroupWord::parse(word, cfg.n_generators())?;
    let m = represent(&w, &cfg)?;

    let mut payload = json!({
        "config": config_json(&cfg),
        "word": w.to_string(),
        "matrix": matrix_json(&m),
        "warnings": warnings_json(&warnings),
    });
    let mut text = String::new();
    for v in &warnings {
        writeln!(text, "warning: {v}").unwrap();
    }
    writeln!(text, "{m}").unwrap();
    if approx {
        let rows: Vec<Value> = m
            .rows()
            .map(|row| row.iter().map(|x| json!(x.to_f64_parts())).collect())
            .collect();
        payload["approx"] = Value::Array(rows);
        for row in m.rows() {
            let cells: Vec<String> = row
                .iter()
                .map(|x| {
                    let (re, im) = x.to_f64_parts();
                    if im == 0.0 {
                        format!("{re:.9}")
                    } else {
                        format!("{re:.9}{im:+.9}i")
                    }
                })
                .collect();
            writeln!(text, "~ [{}]", cells.join(" ")).unwrap();
        }
    }
    Ok(Outcome { report: CliReport::new("repr", payload, 1, Vec::new()), text })
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, clap::ValueEnum)]
pub enum WordAction {
    Normalize,
    Invert,
    Classify,
}

pub fn word(action: WordAction, input: &str) -> Result<Outcome, CliError> {
    let max_index = max_generator_index(input)?;
    let n = match action {
        WordAction::Classify => {
            if max_index > 2 {
                return Err(CliError::usage(format!(
                    "classify needs a two-generator word, found x{max_index}"
                )));
            }
            2
        }
        _ => max_index.max(1),
    };
    let w = GroupWord::parse(input, n)?;
    let result = match action {
        WordAction::Normalize => w.to_string(),
        WordAction::Invert => w.invert().to_string(),
        WordAction::Classify => w.classify_n2()?.to_string(),
    };
    let payload = json!({
        "action": format!("{action:?}").to_lowercase(),
        "input": input,
        "n_generators": n,
        "reduced": w.to_string(),
        "length": w.len(),
        "result": result,
    });
    Ok(Outcome { report: CliReport::new("word", payload, 1, Vec::new()), text: format!("{result}\n") })
}

pub fn trace(config: &Path, n: u64, strict: bool) -> Result<Outcome, CliError> {
    if n == 0 {
        return Err(CliError::usage("--n must be at least 1"));
    }
    let LoadedConfig { cfg, warnings } = load_config(config, strict)?;
    let to_config_error = |e: gamma2_core::Error| CliError {
        code: crate::report::EXIT_INVALID_CONFIG,
        message: e.to_string(),
        details: Vec::new(),
    };
    let eps = epsilon0(&cfg).map_err(to_config_error)?;
    let t = radial_operator(&cfg).map_err(to_config_error)?;
    let closed = radial_power_trace(&eps, n);
    let brute = t.pow(n).trace();

    let mut failures = Vec::new();
    if closed != brute {
        failures.push(json!({
            "config": config_json(&cfg),
            "n": n,
            "expected": scalar_json(&closed),
            "actual": scalar_json(&brute),
        }));
    }
    let payload = json!({
        "epsilon0": scalar_json(&eps.value),
        "degenerate": eps.is_degenerate(),
        "n": n,
        "radial_operator": matrix_json(&t),
        "closed_form": scalar_json(&closed),
        "brute_force": scalar_json(&brute),
        "agree": closed == brute,
        "warnings": warnings_json(&warnings),
    });
    let mut text = String::new();
    for v in &warnings {
        writeln!(text, "warning: {v}").unwrap();
    }
    writeln!(text, "epsilon0 = {eps}{}", if eps.is_degenerate() { " (degenerate)" } else { "" }).unwrap();
    writeln!(text, "tr(T^{n}) closed form = {closed}").unwrap();
    writeln!(text, "tr(T^{n}) brute force = {brute}").unwrap();
    writeln!(text, "{}", if closed == brute { "agree" } else { "MISMATCH" }).unwrap();
    Ok(Outcome { report: CliReport::new("trace", payload, 1, failures), text })
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, clap::ValueEnum)]
pub enum TableFormat {
    Text,
    Csv,
    Json,
}

pub const MAX_LUCAS_ROWS: usize = 64;

pub fn lucas(rows: usize, format: TableFormat, numbers: bool) -> Result<Outcome, CliError> {
    if !(1..=MAX_LUCAS_ROWS).contains(&rows) {
        return Err(CliError::usage(format!("--rows must be in 1..={MAX_LUCAS_ROWS}, got {rows}")));
    }
    let table = lucas_triangle(rows);
    let sums = table.row_sums();
    let join = |sep: &str| sums.iter().map(ToString::to_string).collect::<Vec<_>>().join(sep);
    let text = match format {
        TableFormat::Text if numbers => format!("{}\n{}\n", table.to_text(), join(" ")),
        TableFormat::Text => table.to_text(),
        TableFormat::Csv if numbers => format!("{}\n{}\n", table.to_csv(), join(",")),
        TableFormat::Csv => table.to_csv(),
        TableFormat::Json if numbers => {
            format!("{{\"triangle\":{},\"lucas_numbers\":[{}]}}\n", table.to_json(), join(","))
        }
        TableFormat::Json => format!("{}\n", table.to_json()),
    };
    let triangle: Value = serde_json::from_str(&table.to_json()).expect("table JSON is well formed");
    let mut payload = json!({ "rows": rows, "triangle": triangle });
    if numbers {
        payload["lucas_numbers"] = serde_json::from_str(&format!("[{}]", join(","))).unwrap();
    }
    Ok(Outcome { report: CliReport::new("lucas", payload, rows as u64, Vec::new()), text })
}
