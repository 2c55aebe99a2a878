use canonical_symbols::cyclotomic::RouquierFamily;
use canonical_symbols::hecke::{DTag, WeylType};
use canonical_symbols::{Bipartition, Constructible, Laurent, Matrix, MonomialWord, Rational};
use serde_json::{json, Value};

use crate::OutputFormat;

fn to_csv(records: Vec<Vec<String>>) -> String {
    let mut w = csv::Writer::from_writer(Vec::new());
    for rec in records {
        w.write_record(&rec).expect("writing to memory");
    }
    String::from_utf8(w.into_inner().expect("flushing to memory")).expect("csv output is utf-8")
}

fn pretty(v: &Value) -> String {
    let mut s = serde_json::to_string_pretty(v).expect("json values serialize");
    s.push('\n');
    s
}

fn latex_entry(p: &Laurent) -> String {
    if p.is_zero() {
        r"\cdot".into()
    } else {
        p.to_latex()
    }
}

fn ratio_string(q: &Rational) -> String {
    if *q.denom() == 1 {
        q.numer().to_string()
    } else {
        format!("{}/{}", q.numer(), q.denom())
    }
}

fn ratio_latex(q: &Rational) -> String {
    match (*q.numer(), *q.denom()) {
        (1, 1) => String::new(),
        (n, 1) => n.to_string(),
        (n, d) => format!(r"\tfrac{{{n}}}{{{d}}}"),
    }
}

fn tag_str(tag: Option<DTag>) -> Option<&'static str> {
    tag.map(|t| match t {
        DTag::I => "I",
        DTag::II => "II",
    })
}

pub fn matrix(
    format: OutputFormat,
    m: u32,
    k: i64,
    r: u32,
    mat: &Matrix,
    words: Option<&[MonomialWord]>,
) -> String {
    let width = mat
        .rows
        .iter()
        .map(Bipartition::label_width)
        .max()
        .unwrap_or(0);
    let label = |bp: &Bipartition| bp.padded_label(width);
    let rows: Vec<String> = mat.rows.iter().map(label).collect();
    let cols: Vec<String> = mat.columns.iter().map(label).collect();
    match format {
        OutputFormat::Json => {
            let mut doc = json!({
                "m": m,
                "k": k,
                "r": r,
                "rows": rows,
                "columns": cols,
                "entries": mat.entries,
            });
            if let Some(words) = words {
                doc["words"] = json!(words.iter().map(ToString::to_string).collect::<Vec<_>>());
            }
            pretty(&doc)
        }
        OutputFormat::Csv => {
            let mut recs = vec![std::iter::once("label".to_string())
                .chain(cols)
                .collect::<Vec<_>>()];
            for (name, row) in rows.into_iter().zip(&mat.entries) {
                recs.push(
                    std::iter::once(name)
                        .chain(row.iter().map(ToString::to_string))
                        .collect(),
                );
            }
            if let Some(words) = words {
                recs.push(
                    std::iter::once("word".to_string())
                        .chain(words.iter().map(ToString::to_string))
                        .collect(),
                );
            }
            to_csv(recs)
        }
        OutputFormat::Latex => {
            let mut out = format!("\\begin{{array}}{{l|{}}}\n", "c".repeat(cols.len()));
            let head: Vec<String> = std::iter::once(String::new()).chain(cols).collect();
            out.push_str(&head.join(" & "));
            out.push_str(" \\\\\n\\hline\n");
            for (name, row) in rows.into_iter().zip(&mat.entries) {
                let line: Vec<String> = std::iter::once(name)
                    .chain(row.iter().map(latex_entry))
                    .collect();
                out.push_str(&line.join(" & "));
                out.push_str(" \\\\\n");
            }
            if let Some(words) = words {
                out.push_str("\\hline\n");
                let line: Vec<String> = std::iter::once("\\text{word}".to_string())
                    .chain(words.iter().map(|w| w.to_string()))
                    .collect();
                out.push_str(&line.join(" & "));
                out.push_str(" \\\\\n");
            }
            out.push_str("\\end{array}\n");
            out
        }
    }
}

pub fn characters(
    format: OutputFormat,
    records: &[(Option<Bipartition>, Constructible)],
) -> String {
    let kind = |c: &Constructible| match c.kind {
        WeylType::B => "B",
        WeylType::D => "D",
    };
    match format {
        OutputFormat::Json => {
            let docs: Vec<Value> = records
                .iter()
                .map(|(sym, c)| {
                    let terms: Vec<Value> = c
                        .terms
                        .iter()
                        .map(|(l, q)| {
                            json!({
                                "label": l.bipartition.to_string(),
                                "tag": tag_str(l.tag),
                                "coeff": [q.numer(), q.denom()],
                            })
                        })
                        .collect();
                    let mut doc = json!({"type": kind(c), "terms": terms});
                    if let Some(s) = sym {
                        doc["symbol"] = json!(s.to_string());
                    }
                    doc
                })
                .collect();
            pretty(&Value::Array(docs))
        }
        OutputFormat::Csv => {
            let mut recs = vec![["character", "type", "label", "tag", "coeff"]
                .map(String::from)
                .to_vec()];
            for (i, (_, c)) in records.iter().enumerate() {
                for (l, q) in &c.terms {
                    recs.push(vec![
                        i.to_string(),
                        kind(c).into(),
                        l.bipartition.to_string(),
                        tag_str(l.tag).unwrap_or("").into(),
                        ratio_string(q),
                    ]);
                }
            }
            to_csv(recs)
        }
        OutputFormat::Latex => {
            let mut out = String::from("\\begin{array}{l}\n");
            for (_, c) in records {
                let terms: Vec<String> = c
                    .terms
                    .iter()
                    .map(|(l, q)| {
                        let sup = tag_str(l.tag).map_or(String::new(), |t| format!("^{{{t}}}"));
                        format!("{}\\chi_{{{}}}{sup}", ratio_latex(q), l.bipartition)
                    })
                    .collect();
                out.push_str(&terms.join(" + "));
                out.push_str(" \\\\\n");
            }
            out.push_str("\\end{array}\n");
            out
        }
    }
}

pub fn families(format: OutputFormat, blocks: &[RouquierFamily]) -> String {
    match format {
        OutputFormat::Json => {
            let docs: Vec<Value> = blocks
                .iter()
                .map(|f| {
                    json!({
                        "content": f.content,
                        "members": f.members.iter().map(ToString::to_string).collect::<Vec<_>>(),
                    })
                })
                .collect();
            pretty(&Value::Array(docs))
        }
        OutputFormat::Csv => {
            let mut recs = vec![vec!["family".to_string(), "member".to_string()]];
            for (i, f) in blocks.iter().enumerate() {
                for dp in &f.members {
                    recs.push(vec![i.to_string(), dp.to_string()]);
                }
            }
            to_csv(recs)
        }
        OutputFormat::Latex => {
            let mut out = String::from("\\begin{array}{l}\n");
            for f in blocks {
                let members: Vec<String> = f.members.iter().map(ToString::to_string).collect();
                out.push_str(&format!("\\{{{}\\}} \\\\\n", members.join(", ")));
            }
            out.push_str("\\end{array}\n");
            out
        }
    }
}
