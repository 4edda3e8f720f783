//! Result records and the json, csv, tex and plain emitters.

use num_traits::Signed;
use seifert_kappa::exact::json::cyclotomic_to_json;
use seifert_kappa::exact::numeric::evaluate;
use seifert_kappa::{CyclotomicValue, Rational};
use serde_json::{json, Map, Value};

/// Digits of the decimal approximation attached to cyclotomic values.
pub const APPROX_DIGITS: u32 = 50;

/// One output cell.
#[derive(Clone, Debug)]
pub enum Cell {
    /// Free text.
    Str(String),
    /// An integer.
    Int(i64),
    /// A boolean.
    Bool(bool),
    /// An exact rational.
    Rat(Rational),
    /// An exact cyclotomic value.
    Cyc(CyclotomicValue),
    /// A list of cells.
    List(Vec<Cell>),
    /// Missing value.
    Null,
}

impl From<&str> for Cell {
    fn from(s: &str) -> Self {
        Cell::Str(s.to_string())
    }
}

impl From<String> for Cell {
    fn from(s: String) -> Self {
        Cell::Str(s)
    }
}

impl From<i64> for Cell {
    fn from(v: i64) -> Self {
        Cell::Int(v)
    }
}

impl From<usize> for Cell {
    fn from(v: usize) -> Self {
        Cell::Int(v as i64)
    }
}

impl From<bool> for Cell {
    fn from(v: bool) -> Self {
        Cell::Bool(v)
    }
}

impl From<Rational> for Cell {
    fn from(v: Rational) -> Self {
        Cell::Rat(v)
    }
}

impl From<CyclotomicValue> for Cell {
    fn from(v: CyclotomicValue) -> Self {
        Cell::Cyc(v)
    }
}

impl<T: Into<Cell>> From<Option<T>> for Cell {
    fn from(v: Option<T>) -> Self {
        v.map_or(Cell::Null, Into::into)
    }
}

impl<T: Into<Cell>> From<Vec<T>> for Cell {
    fn from(v: Vec<T>) -> Self {
        Cell::List(v.into_iter().map(Into::into).collect())
    }
}

/// An ordered list of named cells.
#[derive(Clone, Debug, Default)]
pub struct Record(pub Vec<(String, Cell)>);

impl Record {
    /// An empty record.
    pub fn new() -> Self {
        Record::default()
    }

    /// Appends a field.
    pub fn with(mut self, key: &str, value: impl Into<Cell>) -> Self {
        self.0.push((key.to_string(), value.into()));
        self
    }
}

/// Output format.
#[derive(Clone, Copy, Debug, PartialEq, Eq, clap::ValueEnum)]
pub enum Format {
    /// JSON: one object, or an array for several records.
    Json,
    /// CSV with a header row.
    Csv,
    /// A LaTeX tabular.
    Tex,
    /// `key = value` lines.
    Plain,
}

/// The result of a subcommand.
#[derive(Clone, Debug)]
pub struct Report {
    /// Rows in deterministic order.
    pub records: Vec<Record>,
    /// Emit a lone record as an object rather than an array.
    pub single: bool,
    /// Preformatted TeX overriding the generic tabular.
    pub tex: Option<String>,
}

impl Report {
    /// A report with one record.
    pub fn one(r: Record) -> Self {
        Report { records: vec![r], single: true, tex: None }
    }

    /// A report with many records.
    pub fn many(records: Vec<Record>) -> Self {
        Report { records, single: false, tex: None }
    }

    /// Renders in the requested format.
    pub fn render(&self, format: Format) -> String {
        match format {
            Format::Json => self.json(),
            Format::Csv => self.csv(),
            Format::Tex => self.tex.clone().unwrap_or_else(|| self.tabular()),
            Format::Plain => self.plain(),
        }
    }

    fn json(&self) -> String {
        let objs: Vec<Value> = self
            .records
            .iter()
            .map(|r| Value::Object(r.0.iter().map(|(k, v)| (k.clone(), cell_json(v))).collect::<Map<_, _>>()))
            .collect();
        let v = if self.single && objs.len() == 1 { objs.into_iter().next().unwrap() } else { Value::Array(objs) };
        serde_json::to_string_pretty(&v).expect("JSON values serialize") + "\n"
    }

    fn columns(&self) -> Vec<String> {
        let mut cols: Vec<String> = Vec::new();
        for r in &self.records {
            for (k, v) in &r.0 {
                let keys = match v {
                    Cell::Cyc(_) => vec![k.clone(), format!("{k}_re"), format!("{k}_im")],
                    _ => vec![k.clone()],
                };
                for key in keys {
                    if !cols.contains(&key) {
                        cols.push(key);
                    }
                }
            }
        }
        cols
    }

    fn flat(r: &Record) -> Vec<(String, String)> {
        let mut out = Vec::new();
        for (k, v) in &r.0 {
            out.push((k.clone(), cell_text(v)));
            if let Cell::Cyc(c) = v {
                let a = evaluate(c, APPROX_DIGITS + 5);
                out.push((format!("{k}_re"), a.re_decimal(APPROX_DIGITS)));
                out.push((format!("{k}_im"), a.im_decimal(APPROX_DIGITS)));
            }
        }
        out
    }

    fn csv(&self) -> String {
        let cols = self.columns();
        let mut w = csv::Writer::from_writer(Vec::new());
        w.write_record(&cols).expect("in-memory write");
        for r in &self.records {
            let flat = Self::flat(r);
            let row: Vec<String> = cols
                .iter()
                .map(|c| flat.iter().find(|(k, _)| k == c).map(|(_, v)| v.clone()).unwrap_or_default())
                .collect();
            w.write_record(&row).expect("in-memory write");
        }
        String::from_utf8(w.into_inner().expect("in-memory flush")).expect("UTF-8 output")
    }

    fn tabular(&self) -> String {
        let cols: Vec<String> = self.columns().into_iter().filter(|c| !c.ends_with("_re") && !c.ends_with("_im")).collect();
        let mut s = format!("\\begin{{tabular}}{{{}}}\n\\hline\n", "|l".repeat(cols.len()) + "|");
        let head: Vec<String> = cols.iter().map(|c| format!("\\texttt{{{}}}", c.replace('_', "\\_"))).collect();
        s += &format!("{} \\\\ \\hline\n", head.join(" & "));
        for r in &self.records {
            let row: Vec<String> = cols
                .iter()
                .map(|c| r.0.iter().find(|(k, _)| k == c).map(|(_, v)| cell_tex(v)).unwrap_or_default())
                .collect();
            s += &format!("{} \\\\ \\hline\n", row.join(" & "));
        }
        s + "\\end{tabular}\n"
    }

    fn plain(&self) -> String {
        let blocks: Vec<String> = self
            .records
            .iter()
            .map(|r| {
                let mut b = String::new();
                for (k, v) in Self::flat(r) {
                    b += &format!("{k} = {v}\n");
                }
                b
            })
            .collect();
        blocks.join("\n")
    }
}

fn cell_json(c: &Cell) -> Value {
    match c {
        Cell::Str(s) => json!(s),
        Cell::Int(v) => json!(v),
        Cell::Bool(v) => json!(v),
        Cell::Rat(r) => json!(r.to_string()),
        Cell::Cyc(v) => {
            let mut o = cyclotomic_to_json(v);
            let a = evaluate(v, APPROX_DIGITS + 5);
            o["approx"] = json!({
                "re": a.re_decimal(APPROX_DIGITS),
                "im": a.im_decimal(APPROX_DIGITS),
                "note": "non-authoritative 50-digit decimal approximation",
            });
            o
        }
        Cell::List(v) => Value::Array(v.iter().map(cell_json).collect()),
        Cell::Null => Value::Null,
    }
}

fn cell_text(c: &Cell) -> String {
    match c {
        Cell::Str(s) => s.clone(),
        Cell::Int(v) => v.to_string(),
        Cell::Bool(v) => v.to_string(),
        Cell::Rat(r) => r.to_string(),
        Cell::Cyc(v) => v.to_string(),
        Cell::List(v) => v.iter().map(cell_text).collect::<Vec<_>>().join(";"),
        Cell::Null => String::new(),
    }
}

/// A rational as `\tfrac{n}{d}`, or an integer.
pub fn rational_tex(r: &Rational) -> String {
    if r.is_integer() {
        return r.to_string();
    }
    let sign = if r.is_negative() { "-" } else { "" };
    format!("{sign}\\tfrac{{{}}}{{{}}}", r.numer().abs(), r.denom())
}

fn cell_tex(c: &Cell) -> String {
    match c {
        Cell::Rat(r) => format!("${}$", rational_tex(r)),
        Cell::List(v) => v.iter().map(cell_tex).collect::<Vec<_>>().join(", "),
        Cell::Cyc(v) => format!("\\texttt{{{}}}", v.to_string().replace('_', "\\_").replace('^', "\\^{}")),
        other => cell_text(other).replace('_', "\\_").replace('#', "\\#"),
    }
}
