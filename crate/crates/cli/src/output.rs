//! Table rendering: long-format CSV with a header row, or JSON as an array
//! of row objects. Floats print with 12 significant digits in CSV; JSON
//! carries the raw f64 values.

use std::io::Write;

#[derive(Debug, Clone, PartialEq)]
pub enum Cell {
    Num(f64),
    Text(String),
    Empty,
}

impl Cell {
    pub fn text(s: &str) -> Self {
        Cell::Text(s.to_string())
    }
}

#[derive(Debug, Clone)]
pub struct Table {
    pub columns: Vec<&'static str>,
    pub rows: Vec<Vec<Cell>>,
}

impl Table {
    pub fn new(columns: Vec<&'static str>) -> Self {
        Self { columns, rows: Vec::new() }
    }

    pub fn push(&mut self, row: Vec<Cell>) {
        debug_assert_eq!(row.len(), self.columns.len());
        self.rows.push(row);
    }
}

/// 12 significant digits.
pub fn fmt_sig12(x: f64) -> String {
    format!("{x:.11e}")
}

pub fn write_csv(table: &Table, out: &mut dyn Write) -> std::io::Result<()> {
    writeln!(out, "{}", table.columns.join(","))?;
    for row in &table.rows {
        let cells: Vec<String> = row
            .iter()
            .map(|c| match c {
                Cell::Num(x) => fmt_sig12(*x),
                Cell::Text(s) => s.clone(),
                Cell::Empty => String::new(),
            })
            .collect();
        writeln!(out, "{}", cells.join(","))?;
    }
    Ok(())
}

pub fn write_json(table: &Table, out: &mut dyn Write) -> std::io::Result<()> {
    let rows: Vec<serde_json::Value> = table
        .rows
        .iter()
        .map(|row| {
            let obj: serde_json::Map<String, serde_json::Value> = table
                .columns
                .iter()
                .zip(row)
                .map(|(col, cell)| {
                    let v = match cell {
                        Cell::Num(x) => serde_json::json!(x),
                        Cell::Text(s) => serde_json::json!(s),
                        Cell::Empty => serde_json::Value::Null,
                    };
                    (col.to_string(), v)
                })
                .collect();
            serde_json::Value::Object(obj)
        })
        .collect();
    let doc = serde_json::Value::Array(rows);
    writeln!(out, "{}", serde_json::to_string_pretty(&doc)?)?;
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn csv_formats_twelve_digits() {
        assert_eq!(fmt_sig12(0.5), "5.00000000000e-1");
        assert_eq!(fmt_sig12(1.0 / 3.0), "3.33333333333e-1");
    }

    #[test]
    fn csv_and_json_round_trip() {
        let mut t = Table::new(vec!["k", "label"]);
        t.push(vec![Cell::Num(std::f64::consts::PI), Cell::text("block")]);
        t.push(vec![Cell::Empty, Cell::text("total")]);
        let mut csv = Vec::new();
        write_csv(&t, &mut csv).unwrap();
        let csv = String::from_utf8(csv).unwrap();
        assert!(csv.starts_with("k,label\n"));
        assert!(csv.contains("3.14159265359e0,block"));

        let mut json = Vec::new();
        write_json(&t, &mut json).unwrap();
        let doc: serde_json::Value = serde_json::from_slice(&json).unwrap();
        assert_eq!(doc[0]["label"], "block");
        assert!((doc[0]["k"].as_f64().unwrap() - std::f64::consts::PI).abs() < 1e-15);
        assert!(doc[1]["k"].is_null());
    }
}
