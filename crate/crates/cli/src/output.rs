//! Document rendering: TXT (aligned columns), CSV (header + records), and
//! JSON (one compact document per invocation).

use clap::ValueEnum;
use pentasigma::SigmaMatrixWindow;
use serde::Serialize;
use serde_json::Value;

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum OutputFormat {
    Txt,
    Csv,
    Json,
}

pub fn json_document<T: Serialize>(value: &T) -> String {
    let mut doc = serde_json::to_string(value).expect("serializable document");
    doc.push('\n');
    doc
}

/// An integer too large for JSON's f64 range still serializes exactly:
/// the arbitrary-precision number representation keeps the literal digits.
pub fn big_number(digits: &str) -> Value {
    Value::Number(digits.parse().expect("decimal digit string"))
}

/// Render (index, value) pairs.
pub fn sequence_document(
    index_header: &str,
    value_header: &str,
    pairs: &[(u64, String)],
    format: OutputFormat,
) -> String {
    match format {
        OutputFormat::Csv => {
            let mut doc = format!("{index_header},{value_header}\n");
            for (index, value) in pairs {
                doc.push_str(&format!("{index},{value}\n"));
            }
            doc
        }
        OutputFormat::Txt => {
            let iw = pairs
                .iter()
                .map(|(i, _)| i.to_string().len())
                .max()
                .unwrap_or(1);
            let vw = pairs.iter().map(|(_, v)| v.len()).max().unwrap_or(1);
            let mut doc = String::new();
            for (index, value) in pairs {
                doc.push_str(&format!("{index:>iw$}  {value:>vw$}\n"));
            }
            doc
        }
        OutputFormat::Json => {
            let values: Vec<Value> = pairs.iter().map(|(_, v)| big_number(v)).collect();
            json_document(&values)
        }
    }
}

/// Render a bare list (used for primes).
pub fn list_document(header: &str, values: &[u64], format: OutputFormat) -> String {
    match format {
        OutputFormat::Csv => {
            let mut doc = format!("{header}\n");
            for value in values {
                doc.push_str(&format!("{value}\n"));
            }
            doc
        }
        OutputFormat::Txt => {
            let mut doc = String::new();
            for value in values {
                doc.push_str(&format!("{value}\n"));
            }
            doc
        }
        OutputFormat::Json => json_document(&values),
    }
}

#[derive(Serialize)]
struct MatrixDocument {
    rows: usize,
    cols: usize,
    entries: Vec<Vec<i64>>,
    regions: Vec<Vec<String>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    correction_border: Option<Vec<Vec<bool>>>,
}

fn annotated_cell(window: &SigmaMatrixWindow, i: usize, j: usize) -> String {
    let tag = window.region(i, j);
    let border = if tag.on_correction_border { "*" } else { "" };
    format!("{}({}{})", window.entry(i, j), tag.region.label(), border)
}

/// Render a σ-matrix window. TXT and CSV carry region tags only when
/// annotation is requested (cells become `value(U|L1|L2)` with `*` marking
/// the correction border); JSON always carries the region grid and adds
/// the border grid under annotation.
pub fn matrix_document(window: &SigmaMatrixWindow, format: OutputFormat, annotate: bool) -> String {
    let (rows, cols) = (window.rows(), window.cols());
    match format {
        OutputFormat::Csv => {
            let mut doc = String::new();
            for i in 0..=rows {
                let cells: Vec<String> = (0..=cols)
                    .map(|j| {
                        if annotate {
                            annotated_cell(window, i, j)
                        } else {
                            window.entry(i, j).to_string()
                        }
                    })
                    .collect();
                doc.push_str(&cells.join(","));
                doc.push('\n');
            }
            doc
        }
        OutputFormat::Txt => {
            let render = |i: usize, j: usize| {
                if annotate {
                    annotated_cell(window, i, j)
                } else {
                    window.entry(i, j).to_string()
                }
            };
            let width = (0..=rows)
                .flat_map(|i| (0..=cols).map(move |j| (i, j)))
                .map(|(i, j)| render(i, j).len())
                .max()
                .unwrap_or(1);
            let mut doc = String::new();
            for i in 0..=rows {
                let cells: Vec<String> = (0..=cols)
                    .map(|j| format!("{:>width$}", render(i, j)))
                    .collect();
                doc.push_str(&cells.join(" "));
                doc.push('\n');
            }
            doc
        }
        OutputFormat::Json => {
            let entries: Vec<Vec<i64>> = (0..=rows)
                .map(|i| (0..=cols).map(|j| window.entry(i, j)).collect())
                .collect();
            let regions: Vec<Vec<String>> = (0..=rows)
                .map(|i| {
                    (0..=cols)
                        .map(|j| window.region(i, j).region.label().to_string())
                        .collect()
                })
                .collect();
            let correction_border = annotate.then(|| {
                (0..=rows)
                    .map(|i| {
                        (0..=cols)
                            .map(|j| window.region(i, j).on_correction_border)
                            .collect()
                    })
                    .collect()
            });
            json_document(&MatrixDocument {
                rows,
                cols,
                entries,
                regions,
                correction_border,
            })
        }
    }
}

#[derive(Serialize)]
pub struct BenchRow {
    pub task: String,
    pub seconds: f64,
}

pub fn bench_document(rows: &[BenchRow], format: OutputFormat) -> String {
    match format {
        OutputFormat::Csv => {
            let mut doc = String::from("task,seconds\n");
            for row in rows {
                doc.push_str(&format!("{},{:.6}\n", row.task, row.seconds));
            }
            doc
        }
        OutputFormat::Txt => {
            let width = rows.iter().map(|r| r.task.len()).max().unwrap_or(1);
            let mut doc = String::new();
            for row in rows {
                doc.push_str(&format!("{:<width$}  {:.6}\n", row.task, row.seconds));
            }
            doc
        }
        OutputFormat::Json => json_document(&rows),
    }
}
