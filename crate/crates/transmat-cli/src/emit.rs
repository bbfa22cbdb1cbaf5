//! JSON rendering. All row/column labels and permutation images are 1-based
//! in the output, matching the human-readable convention.

use serde_json::{json, Value};

use transmat::matrix::{BinaryMatrix, PermPair, Permutation};
use transmat::maximal::MaximalityReport;
use transmat::rank2::{Rank2Classification, RowTypeCounts};
use transmat::tropical::{DetResult, TropValue, TrankTrace};

pub fn matrix_json(x: &BinaryMatrix) -> Value {
    json!(x.to_vecs())
}

pub fn perm_json(p: &Permutation) -> Value {
    json!(p.as_slice().iter().map(|&v| v + 1).collect::<Vec<_>>())
}

pub fn perm_pair_json(p: &PermPair) -> Value {
    json!({ "row_perm": perm_json(&p.rows), "col_perm": perm_json(&p.cols) })
}

pub fn trop_value_json(v: TropValue) -> Value {
    if v.is_bottom() {
        json!("-inf")
    } else {
        json!(v.as_f64())
    }
}

pub fn det_json(d: &DetResult) -> Value {
    json!({
        "value": trop_value_json(d.value),
        "multiplicity": d.multiplicity,
        "witnesses": d
            .witnesses
            .iter()
            .map(|w| w.iter().map(|&row| row + 1).collect::<Vec<_>>())
            .collect::<Vec<_>>(),
    })
}

pub fn report_json(r: &MaximalityReport) -> Value {
    json!({
        "viable": r.viable,
        "verdict": r.verdict,
        "added": r.added.iter().map(|&(i, j)| [i + 1, j + 1]).collect::<Vec<_>>(),
        "columns": r.columns.iter().map(|c| json!({
            "column": c.column + 1,
            "block_rank": c.block_rank,
            "basis_count": c.basis_count,
            "minor_count": c.minor_count,
            "coloops": c.coloops.iter().map(|&e| e + 1).collect::<Vec<_>>(),
        })).collect::<Vec<_>>(),
    })
}

pub fn report_text(r: &MaximalityReport) -> String {
    let mut out = String::new();
    out.push_str(&format!("viable: {}\nverdict: {}\n", r.viable, r.verdict));
    if !r.added.is_empty() {
        let cells: Vec<String> =
            r.added.iter().map(|&(i, j)| format!("({},{})", i + 1, j + 1)).collect();
        out.push_str(&format!("added: {}\n", cells.join(" ")));
    }
    for c in &r.columns {
        let basis = c.basis_count.map_or("-".into(), |v| v.to_string());
        let minor = c.minor_count.map_or("-".into(), |v| v.to_string());
        let coloops: Vec<String> = c.coloops.iter().map(|&e| (e + 1).to_string()).collect();
        out.push_str(&format!(
            "column {}: block_rank={} basis_count={} minor_count={} coloops={{{}}}\n",
            c.column + 1,
            c.block_rank,
            basis,
            minor,
            coloops.join(",")
        ));
    }
    out
}

pub fn counts_json(c: &RowTypeCounts) -> Value {
    json!({
        "both": c.both,
        "first_only": c.first_only,
        "second_only": c.second_only,
        "neither": c.neither,
    })
}

pub fn classification_json(c: &Rank2Classification) -> Value {
    json!({
        "family": c.family.to_string(),
        "counts": counts_json(&c.counts),
        "row_perm": perm_json(&c.perm.rows),
        "col_perm": perm_json(&c.perm.cols),
    })
}

pub fn trace_json(rank: usize, t: &TrankTrace) -> Value {
    json!({ "rank": rank, "appends": t.appends, "verdicts": t.verdicts })
}

/// The single structured-output object.
pub fn envelope(verb: &str, input: Value, result: Value, report: Option<Value>) -> Value {
    match report {
        Some(rep) => json!({ "verb": verb, "input": input, "result": result, "report": rep }),
        None => json!({ "verb": verb, "input": input, "result": result }),
    }
}
