//! Rendering of result tables as aligned plain text, markdown, or tab-separated values.

use clap::ValueEnum;

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Plain,
    Markdown,
    Tsv,
}

pub struct Table {
    header: Vec<String>,
    rows: Vec<Vec<String>>,
}

impl Table {
    pub fn new<S: Into<String>>(header: impl IntoIterator<Item = S>) -> Self {
        Self { header: header.into_iter().map(Into::into).collect(), rows: Vec::new() }
    }

    pub fn row<S: ToString>(&mut self, cells: impl IntoIterator<Item = S>) {
        self.rows.push(cells.into_iter().map(|c| c.to_string()).collect());
    }

    pub fn render(&self, format: Format) -> String {
        match format {
            Format::Tsv => {
                let mut out = self.header.join("\t") + "\n";
                for r in &self.rows {
                    out += &(r.join("\t") + "\n");
                }
                out
            }
            Format::Markdown => {
                let line = |cells: &[String]| format!("| {} |\n", cells.join(" | "));
                let mut out = line(&self.header);
                out += &line(&self.header.iter().map(|_| "---".to_string()).collect::<Vec<_>>());
                for r in &self.rows {
                    out += &line(r);
                }
                out
            }
            Format::Plain => {
                let widths: Vec<usize> = (0..self.header.len())
                    .map(|i| {
                        self.rows.iter().map(|r| r.get(i).map_or(0, |c| c.chars().count())).chain([self.header[i].chars().count()]).max().unwrap_or(0)
                    })
                    .collect();
                let line = |cells: &[String]| {
                    let padded: Vec<String> = cells.iter().zip(&widths).map(|(c, &w)| format!("{c:<w$}")).collect();
                    padded.join("  ").trim_end().to_string() + "\n"
                };
                let mut out = line(&self.header);
                for r in &self.rows {
                    out += &line(r);
                }
                out
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn renders_all_formats() {
        let mut t = Table::new(["loop", "n_CI"]);
        t.row(["Z/27", "2"]);
        assert_eq!(t.render(Format::Tsv), "loop\tn_CI\nZ/27\t2\n");
        assert_eq!(t.render(Format::Markdown), "| loop | n_CI |\n| --- | --- |\n| Z/27 | 2 |\n");
        assert_eq!(t.render(Format::Plain), "loop  n_CI\nZ/27  2\n");
    }
}
