//! Text and JSON rendering of tally results and Llull matrices.
//!
//! All rationals are rendered as `num/den` strings, never as floats.
//! JSON objects use sorted keys and deterministic array orders, so the
//! output is byte-identical across runs for the same input and
//! configuration.

use std::collections::BTreeSet;

use llull_core::ballots::{LlullMatrix, ScoreVectors};
use llull_core::methods::MethodResult;
use llull_core::rational::{format_rat, Rat};
use serde_json::{json, Map, Value};

fn option_set(result: &MethodResult, set: &BTreeSet<usize>) -> String {
    let names: Vec<&str> = set.iter().map(|&i| result.options[i].as_str()).collect();
    format!("{{{}}}", names.join(", "))
}

fn rat_value(r: &Rat) -> Value {
    Value::String(format_rat(r))
}

fn per_option_map(options: &[String], values: &[Rat]) -> Value {
    let mut map = Map::new();
    for (name, value) in options.iter().zip(values) {
        map.insert(name.clone(), rat_value(value));
    }
    Value::Object(map)
}

pub fn tally_text(result: &MethodResult) -> String {
    let mut out = String::new();
    out.push_str(&format!("method: {}\n", result.method.id()));
    out.push_str(&format!("options: {}\n", result.options.join(", ")));
    out.push_str(&format!(
        "winners: {}\n",
        option_set(result, &result.winners)
    ));
    if let Some(acc) = &result.acceptabilities {
        out.push_str("acceptabilities:\n");
        for (name, value) in result.options.iter().zip(acc) {
            out.push_str(&format!("  {name}: {}\n", format_rat(value)));
        }
    }
    if let Some(ranking) = &result.ranking {
        let layers: Vec<String> = ranking
            .iter()
            .map(|layer| {
                let names: Vec<&str> = layer.iter().map(|&i| result.options[i].as_str()).collect();
                format!("[{}]", names.join(" "))
            })
            .collect();
        out.push_str(&format!("ranking: {}\n", layers.join(" ")));
    }
    let d = &result.diagnostics;
    if !d.refinement_rounds.is_empty() {
        out.push_str("refinement rounds:\n");
        for round in &d.refinement_rounds {
            let candidates: Vec<&str> = round
                .candidates
                .iter()
                .map(|&i| result.options[i].as_str())
                .collect();
            out.push_str(&format!(
                "  {{{}}} -> {}\n",
                candidates.join(", "),
                option_set(result, &round.winners)
            ));
        }
    }
    let name_or_none = |o: Option<usize>| -> String {
        o.map_or_else(|| "none".to_string(), |i| result.options[i].clone())
    };
    out.push_str(&format!(
        "condorcet winner (majority): {}\n",
        name_or_none(d.condorcet.winner_majority)
    ));
    out.push_str(&format!(
        "condorcet winner (margin): {}\n",
        name_or_none(d.condorcet.winner_margin)
    ));
    out.push_str(&format!(
        "condorcet loser (majority): {}\n",
        name_or_none(d.condorcet.loser_majority)
    ));
    out.push_str(&format!(
        "smith set: {}\n",
        option_set(result, &d.smith_set)
    ));
    if let Some(sigma) = &d.maximin_sigma {
        let sets: Vec<String> = d
            .maximin_sets
            .iter()
            .map(|s| option_set(result, s))
            .collect();
        out.push_str(&format!(
            "maximin sets (sigma {}): {}\n",
            format_rat(sigma),
            sets.join(", ")
        ));
    }
    out
}

pub fn tally_json(result: &MethodResult) -> String {
    let names = |set: &BTreeSet<usize>| -> Value {
        Value::Array(
            set.iter()
                .map(|&i| Value::String(result.options[i].clone()))
                .collect(),
        )
    };
    let d = &result.diagnostics;
    let condorcet_name = |o: Option<usize>| -> Value {
        o.map_or(Value::Null, |i| Value::String(result.options[i].clone()))
    };
    let value = json!({
        "method": result.method.id(),
        "options": result.options,
        "winners": names(&result.winners),
        "acceptabilities": result
            .acceptabilities
            .as_ref()
            .map_or(Value::Null, |acc| per_option_map(&result.options, acc)),
        "ranking": result.ranking.as_ref().map_or(Value::Null, |layers| {
            Value::Array(
                layers
                    .iter()
                    .map(|layer| {
                        Value::Array(
                            layer
                                .iter()
                                .map(|&i| Value::String(result.options[i].clone()))
                                .collect(),
                        )
                    })
                    .collect(),
            )
        }),
        "diagnostics": {
            "condorcet": {
                "winner_majority": condorcet_name(d.condorcet.winner_majority),
                "winner_margin": condorcet_name(d.condorcet.winner_margin),
                "loser_majority": condorcet_name(d.condorcet.loser_majority),
            },
            "smith_set": names(&d.smith_set),
            "maximin_sets": Value::Array(d.maximin_sets.iter().map(&names).collect()),
            "maximin_sigma": d.maximin_sigma.as_ref().map_or(Value::Null, rat_value),
            "refinement_rounds": Value::Array(
                d.refinement_rounds
                    .iter()
                    .map(|round| {
                        json!({
                            "candidates": round
                                .candidates
                                .iter()
                                .map(|&i| result.options[i].clone())
                                .collect::<Vec<_>>(),
                            "winners": names(&round.winners),
                        })
                    })
                    .collect(),
            ),
        },
    });
    value.to_string()
}

pub fn matrix_text(matrix: &LlullMatrix, scores: &ScoreVectors) -> String {
    let n = matrix.n();
    let mut cells: Vec<Vec<String>> = Vec::with_capacity(n + 1);
    let mut header: Vec<String> = vec![String::new()];
    header.extend(matrix.options().iter().cloned());
    cells.push(header);
    for x in 0..n {
        let mut row = vec![matrix.options()[x].clone()];
        for y in 0..n {
            row.push(if x == y {
                "-".to_string()
            } else {
                format_rat(matrix.entry(x, y))
            });
        }
        cells.push(row);
    }
    let width = cells
        .iter()
        .flat_map(|row| row.iter().map(String::len))
        .max()
        .unwrap_or(1)
        + 2;
    let mut out = String::new();
    for row in &cells {
        for cell in row {
            out.push_str(&format!("{cell:<width$}"));
        }
        while out.ends_with(' ') {
            out.pop();
        }
        out.push('\n');
    }
    out.push_str(&format!(
        "complete: {}\n",
        if matrix.is_complete() { "yes" } else { "no" }
    ));
    out.push_str("scores (plurality, antiplurality, last place, approval, disapproval):\n");
    for (x, name) in matrix.options().iter().enumerate() {
        out.push_str(&format!(
            "  {name}: {}, {}, {}, {}, {}\n",
            format_rat(&scores.plurality[x]),
            format_rat(&scores.antiplurality[x]),
            format_rat(&scores.last_place[x]),
            format_rat(&scores.approval[x]),
            format_rat(&scores.disapproval[x]),
        ));
    }
    out
}

pub fn matrix_json(matrix: &LlullMatrix, scores: &ScoreVectors) -> String {
    let n = matrix.n();
    let rows: Vec<Value> = (0..n)
        .map(|x| {
            Value::Array(
                (0..n)
                    .map(|y| {
                        if x == y {
                            Value::Null
                        } else {
                            rat_value(matrix.entry(x, y))
                        }
                    })
                    .collect(),
            )
        })
        .collect();
    let options = matrix.options();
    json!({
        "options": options,
        "rows": rows,
        "complete": matrix.is_complete(),
        "scores": {
            "plurality": per_option_map(options, &scores.plurality),
            "antiplurality": per_option_map(options, &scores.antiplurality),
            "last_place": per_option_map(options, &scores.last_place),
            "approval": per_option_map(options, &scores.approval),
            "disapproval": per_option_map(options, &scores.disapproval),
        },
    })
    .to_string()
}

/// Reads a matrix back from the JSON produced by [`matrix_json`]; the
/// two are exact inverses of each other.
#[cfg(test)]
pub fn matrix_from_json(text: &str) -> Result<LlullMatrix, String> {
    use llull_core::rational::parse_rat;
    let value: Value = serde_json::from_str(text).map_err(|e| e.to_string())?;
    let options: Vec<String> = value["options"]
        .as_array()
        .ok_or("missing options")?
        .iter()
        .map(|v| v.as_str().map(str::to_string).ok_or("bad option"))
        .collect::<Result<_, _>>()?;
    let rows: Vec<Vec<Rat>> = value["rows"]
        .as_array()
        .ok_or("missing rows")?
        .iter()
        .map(|row| {
            row.as_array()
                .ok_or_else(|| "bad row".to_string())?
                .iter()
                .map(|cell| match cell {
                    Value::Null => Ok(Rat::from_integer(0.into())),
                    Value::String(s) => parse_rat(s).ok_or_else(|| format!("bad entry `{s}`")),
                    other => Err(format!("bad entry {other}")),
                })
                .collect()
        })
        .collect::<Result<_, _>>()?;
    LlullMatrix::from_rows(options, rows).map_err(|e| e.to_string())
}
