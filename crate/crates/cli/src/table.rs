use std::fmt::Write as _;
use std::fs;
use std::path::PathBuf;

use clap::{Args, ValueEnum};
use serde_json::json;
use tiered::counting::CountTable;
use tiered::permweight::two_colored_triangle;
use tiered::weight::{table_tier_types, tier_poly};

use crate::{CliResult, Failure};

/// Largest `n` accepted for the two-coloured partition triangle.
const TRIANGLE_CAPACITY: usize = 50;

#[derive(Args, Debug)]
pub struct TableArgs {
    #[arg(value_enum)]
    kind: TableKind,

    /// Largest number of vertices (qpolys, counts).
    #[arg(long, default_value_t = 6, env = "TIERED_MAX_N")]
    max_n: usize,

    /// Number of triangle rows.
    #[arg(long, default_value_t = 4, env = "TIERED_ROWS")]
    rows: usize,

    /// Number of triangle columns.
    #[arg(long, default_value_t = 9, env = "TIERED_COLS")]
    cols: usize,

    #[arg(long, value_enum, default_value_t = TableFormat::Csv, env = "TIERED_FORMAT")]
    format: TableFormat,

    /// Reuse tables computed by earlier runs of the same version.
    #[arg(long, env = "TIERED_CACHE_DIR")]
    cache_dir: Option<PathBuf>,

    /// Ignore cached tables and overwrite them.
    #[arg(long)]
    recompute: bool,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum TableKind {
    Qpolys,
    Counts,
    Triangle,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum TableFormat {
    Csv,
    Json,
    Latex,
}

impl TableFormat {
    fn extension(self) -> &'static str {
        match self {
            TableFormat::Csv => "csv",
            TableFormat::Json => "json",
            TableFormat::Latex => "tex",
        }
    }
}

fn cache_key(args: &TableArgs) -> String {
    let bounds = match args.kind {
        TableKind::Qpolys | TableKind::Counts => format!("n{}", args.max_n),
        TableKind::Triangle => format!("r{}c{}", args.rows, args.cols),
    };
    let kind = format!("{:?}", args.kind).to_lowercase();
    format!(
        "{kind}-{bounds}-v{}.{}",
        env!("CARGO_PKG_VERSION"),
        args.format.extension()
    )
}

pub fn run(args: &TableArgs) -> CliResult<()> {
    let cached = args
        .cache_dir
        .as_ref()
        .map(|dir| dir.join(cache_key(args)));
    if let Some(path) = &cached {
        if !args.recompute {
            if let Ok(text) = fs::read_to_string(path) {
                return crate::emit(&text);
            }
        }
    }
    let text = match args.kind {
        TableKind::Qpolys => qpolys(args.max_n, args.format)?,
        TableKind::Counts => counts(args.max_n, args.format)?,
        TableKind::Triangle => triangle(args.rows, args.cols, args.format)?,
    };
    if let Some(path) = &cached {
        if let Some(dir) = path.parent() {
            fs::create_dir_all(dir)?;
        }
        fs::write(path, &text)?;
    }
    crate::emit(&text)
}

fn json_text(v: serde_json::Value) -> String {
    let mut s = serde_json::to_string_pretty(&v).expect("serializable");
    s.push('\n');
    s
}

fn qpolys(max_n: usize, format: TableFormat) -> CliResult<String> {
    let types = table_tier_types(max_n);
    let mut rows = Vec::with_capacity(types.len());
    for p in &types {
        rows.push((p, tier_poly(p)?));
    }
    Ok(match format {
        TableFormat::Csv => {
            let mut out = String::from("n,tier_type,polynomial\n");
            for (p, poly) in &rows {
                let parts: Vec<String> = p.parts().iter().map(|x| x.to_string()).collect();
                let _ = writeln!(out, "{},{},{}", p.n(), parts.join(" "), poly);
            }
            out
        }
        TableFormat::Json => json_text(json!(rows
            .iter()
            .map(|(p, poly)| json!({
                "tier_type": p.parts(),
                "polynomial": poly.to_string(),
                "coefficients": poly.coeffs_descending().iter().map(|c| c.to_string()).collect::<Vec<_>>(),
            }))
            .collect::<Vec<_>>())),
        TableFormat::Latex => {
            let mut out = String::new();
            for (p, poly) in &rows {
                let _ = writeln!(out, "${p}$ & ${}$ \\\\", poly.to_latex());
            }
            out
        }
    })
}

fn counts(max_n: usize, format: TableFormat) -> CliResult<String> {
    let table = CountTable::build(3, max_n)?;
    Ok(match format {
        TableFormat::Csv => table.to_csv(),
        TableFormat::Json => json_text(json!(table
            .entries
            .iter()
            .map(|((n, m), (t, p))| json!({"n": n, "m": m, "T": t.to_string(), "P": p.to_string()}))
            .collect::<Vec<_>>())),
        TableFormat::Latex => {
            let mut out = String::new();
            for ((n, m), (t, p)) in &table.entries {
                let _ = writeln!(out, "{n}&{m}&{t}&{p} \\\\");
            }
            out
        }
    })
}

fn triangle(rows: usize, cols: usize, format: TableFormat) -> CliResult<String> {
    if cols > TRIANGLE_CAPACITY {
        return Err(Failure::Capacity(format!(
            "capacity exceeded for triangle columns: requested {cols}, limit {TRIANGLE_CAPACITY}"
        )));
    }
    let mut grid = Vec::with_capacity(rows);
    for k in 1..=rows {
        let mut row = Vec::new();
        for n in k..=cols {
            row.push(two_colored_triangle(n, k)?.to_string());
        }
        grid.push(row);
    }
    Ok(match format {
        TableFormat::Csv => {
            let mut out = String::from("k");
            for n in 1..=cols {
                let _ = write!(out, ",{n}");
            }
            out.push('\n');
            for (i, row) in grid.iter().enumerate() {
                let k = i + 1;
                let mut cells = vec![String::new(); k - 1];
                cells.extend(row.iter().cloned());
                let _ = writeln!(out, "{k},{}", cells.join(","));
            }
            out
        }
        TableFormat::Json => json_text(json!(grid
            .iter()
            .enumerate()
            .map(|(i, row)| json!({"k": i + 1, "first_n": i + 1, "values": row}))
            .collect::<Vec<_>>())),
        TableFormat::Latex => {
            let mut out = String::new();
            for (i, row) in grid.iter().enumerate() {
                let mut cells = vec![String::new(); i];
                cells.extend(row.iter().cloned());
                let _ = writeln!(out, "{} & {} \\\\", i + 1, cells.join(" & "));
            }
            out
        }
    })
}
