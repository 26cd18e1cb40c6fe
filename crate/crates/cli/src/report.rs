//! Aligned tables and JSON output.

use std::io::Write;

use serde::Serialize;

/// A table with optional summary lines; the JSON form is built separately.
pub struct Table {
    pub title: String,
    pub headers: Vec<&'static str>,
    pub rows: Vec<Vec<String>>,
    pub footer: Vec<String>,
}

impl Table {
    pub fn new(title: impl Into<String>, headers: Vec<&'static str>) -> Self {
        Table { title: title.into(), headers, rows: Vec::new(), footer: Vec::new() }
    }

    pub fn render(&self) -> String {
        let ncol = self.headers.len();
        let mut width: Vec<usize> = self.headers.iter().map(|h| h.chars().count()).collect();
        for r in &self.rows {
            for (i, c) in r.iter().enumerate().take(ncol) {
                width[i] = width[i].max(c.chars().count());
            }
        }
        let line = |cells: Vec<&str>| -> String {
            let padded: Vec<String> = cells.iter().enumerate().map(|(i, c)| format!("{:<w$}", c, w = width[i])).collect();
            padded.join("  ").trim_end().to_string()
        };
        let mut out = format!("{}\n", self.title);
        out += &line(self.headers.clone());
        out.push('\n');
        out += &line(width.iter().map(|&w| "-".repeat(w)).collect::<Vec<_>>().iter().map(String::as_str).collect());
        out.push('\n');
        for r in &self.rows {
            out += &line(r.iter().map(String::as_str).collect());
            out.push('\n');
        }
        for f in &self.footer {
            out += f;
            out.push('\n');
        }
        out
    }
}

pub fn emit<T: Serialize>(json: bool, table: &Table, value: &T) -> anyhow::Result<()> {
    let text = if json { serde_json::to_string_pretty(value)? + "\n" } else { table.render() };
    match std::io::stdout().lock().write_all(text.as_bytes()) {
        Err(e) if e.kind() != std::io::ErrorKind::BrokenPipe => Err(e.into()),
        _ => Ok(()),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn columns_align() {
        let mut t = Table::new("demo", vec!["a", "bbb"]);
        t.rows.push(vec!["long".into(), "1".into()]);
        let s = t.render();
        let lines: Vec<&str> = s.lines().collect();
        assert_eq!(lines[1], "a     bbb");
        assert_eq!(lines[3], "long  1");
    }
}
