//! The worked movie-preference and music-categorization cases, recomputed
//! from their fixtures and compared cell by cell with the published tables.
//!
//! Each fixture is an ordinary context document with an extra `printed` key
//! holding the reference values as they were printed (two decimals at most).

use std::sync::Arc;

use serde_json::Value;

use crate::combine::combine_steps;
use crate::context::{parse_json_context, resolve_key};
use crate::error::{Error, Result};
use crate::evidence::{bel, pl, MassFunction};
use crate::lattice::{ConceptId, ConceptLattice};
use crate::rational::{format_exact, format_rounded, parse_rational, round_half_away, Rational};
use crate::report::{Cell, NumberStyle, Table};

/// Decimals of the printed tables.
pub const PRINTED_DIGITS: u32 = 2;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Case {
    Movies1,
    Movies2,
    Movies3,
    Music,
}

impl Case {
    pub const ALL: [Case; 4] = [Case::Movies1, Case::Movies2, Case::Movies3, Case::Music];

    pub fn id(self) -> &'static str {
        match self {
            Case::Movies1 => "movies-1",
            Case::Movies2 => "movies-2",
            Case::Movies3 => "movies-3",
            Case::Music => "music",
        }
    }

    pub fn from_id(id: &str) -> Option<Case> {
        Case::ALL.into_iter().find(|c| c.id() == id)
    }

    pub fn title(self) -> &'static str {
        match self {
            Case::Movies1 => "movies, case 1: conflict with no resolution",
            Case::Movies2 => "movies, case 2: reaching a compromise",
            Case::Movies3 => "movies, case 3: solution to the conflict",
            Case::Music => "music categorization",
        }
    }

    /// The fixture document.
    pub fn fixture(self) -> &'static str {
        match self {
            Case::Movies1 => include_str!("../fixtures/movies-1.json"),
            Case::Movies2 => include_str!("../fixtures/movies-2.json"),
            Case::Movies3 => include_str!("../fixtures/movies-3.json"),
            Case::Music => include_str!("../fixtures/music.json"),
        }
    }
}

/// One computed cell next to its printed counterpart.
#[derive(Debug, Clone, PartialEq)]
pub struct GoldenCell {
    pub computed: Rational,
    pub printed: String,
    pub printed_value: Rational,
}

impl GoldenCell {
    /// The computed value rounded like the printed tables.
    pub fn rounded(&self) -> Rational {
        round_half_away(&self.computed, PRINTED_DIGITS)
    }

    /// Whether rounding the exact value reproduces the printed cell.
    pub fn matches(&self) -> bool {
        self.rounded() == self.printed_value
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct GoldenTable {
    pub title: String,
    pub columns: Vec<String>,
    /// `(row name, cells)`
    pub rows: Vec<(String, Vec<GoldenCell>)>,
}

/// A cell whose rounded value differs from the printed one.
#[derive(Debug, Clone, PartialEq)]
pub struct Annotation {
    pub table: String,
    pub row: String,
    pub column: String,
    pub cell: GoldenCell,
}

impl std::fmt::Display for Annotation {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(
            f,
            "{} at {}: computed {} ({}), printed {}",
            self.row,
            self.column,
            format_rounded(&self.cell.computed, PRINTED_DIGITS),
            format_exact(&self.cell.computed),
            self.cell.printed
        )
    }
}

#[derive(Debug, Clone)]
pub struct CaseReport {
    pub case: Case,
    pub lattice: Arc<ConceptLattice>,
    pub masses: Vec<(String, MassFunction)>,
    /// Result of combining the masses in the printed order.
    pub combined: MassFunction,
    /// Conflict of each combination step.
    pub conflicts: Vec<Rational>,
    pub tables: Vec<GoldenTable>,
}

impl CaseReport {
    pub fn annotations(&self) -> Vec<Annotation> {
        let mut out = Vec::new();
        for table in &self.tables {
            for (row, cells) in &table.rows {
                for (column, cell) in table.columns.iter().zip(cells) {
                    if !cell.matches() {
                        out.push(Annotation {
                            table: table.title.clone(),
                            row: row.clone(),
                            column: column.clone(),
                            cell: cell.clone(),
                        });
                    }
                }
            }
        }
        out
    }

    /// Looks up a computed cell by table title, row and column.
    pub fn cell(&self, table: &str, row: &str, column: &str) -> Option<&GoldenCell> {
        let t = self.tables.iter().find(|t| t.title == table)?;
        let j = t.columns.iter().position(|c| c == column)?;
        t.rows
            .iter()
            .find(|(r, _)| r == row)
            .map(|(_, cells)| &cells[j])
    }

    /// Renderable tables; differing cells are marked and explained in notes.
    pub fn to_tables(&self) -> Vec<Table> {
        let mut out = Vec::new();
        for golden in &self.tables {
            let mut table =
                Table::new(std::iter::once(String::new()).chain(golden.columns.iter().cloned()))
                    .titled(golden.title.clone());
            for (row, cells) in &golden.rows {
                let mut line = vec![Cell::text(row.clone())];
                for (column, cell) in golden.columns.iter().zip(cells) {
                    line.push(Cell::Value {
                        value: cell.computed.clone(),
                        marked: !cell.matches(),
                    });
                    if !cell.matches() {
                        table.notes.push(
                            Annotation {
                                table: golden.title.clone(),
                                row: row.clone(),
                                column: column.clone(),
                                cell: cell.clone(),
                            }
                            .to_string(),
                        );
                    }
                }
                table.push(line);
            }
            out.push(table);
        }
        if let Some(last) = out.last_mut() {
            for (i, c) in self.conflicts.iter().enumerate() {
                last.notes.push(format!(
                    "conflict at step {}: {} ({})",
                    i + 1,
                    NumberStyle::Rounded(PRINTED_DIGITS).format(c),
                    format_exact(c)
                ));
            }
        }
        out
    }
}

/// Recomputes every printed table of `case` from its fixture.
pub fn run_case(case: Case) -> Result<CaseReport> {
    let text = case.fixture();
    let doc = parse_json_context(text)?;
    let lattice = doc.build_lattice()?;
    let masses: Vec<(String, MassFunction)> = doc
        .masses
        .iter()
        .map(|spec| Ok((spec.name.clone(), spec.resolve(&lattice)?)))
        .collect::<Result<_>>()?;

    let root: Value = serde_json::from_str(text)?;
    let printed = root
        .get("printed")
        .ok_or_else(|| Error::Document("fixture has no printed tables".into()))?;
    let columns: Vec<String> = string_list(printed, "columns")?;
    let ids: Vec<ConceptId> = columns
        .iter()
        .map(|c| resolve_key(&lattice, "printed", c))
        .collect::<Result<_>>()?;
    let mass_named = |name: &str| -> Result<&MassFunction> {
        masses
            .iter()
            .find(|(n, _)| n == name)
            .map(|(_, m)| m)
            .ok_or_else(|| Error::Document(format!("no mass named {name:?}")))
    };
    let row = |values: &[String], f: &dyn Fn(ConceptId) -> Rational| -> Result<Vec<GoldenCell>> {
        if values.len() != ids.len() {
            return Err(Error::Document("printed row has the wrong length".into()));
        }
        ids.iter()
            .zip(values)
            .map(|(&c, p)| {
                Ok(GoldenCell {
                    computed: f(c),
                    printed: p.clone(),
                    printed_value: parse_rational(p)?,
                })
            })
            .collect()
    };

    let mut tables = Vec::new();

    let mut mass_table = GoldenTable {
        title: "masses".into(),
        columns: columns.clone(),
        rows: Vec::new(),
    };
    for (name, values) in named_rows(printed, "mass")? {
        let m = mass_named(&name)?;
        mass_table
            .rows
            .push((name, row(&values, &|c| m.value(c).clone())?));
    }
    tables.push(mass_table);

    if printed.get("bel").is_some() {
        let bels = named_rows(printed, "bel")?;
        let pls = named_rows(printed, "pl")?;
        let mut table = GoldenTable {
            title: "belief and plausibility".into(),
            columns: columns.clone(),
            rows: Vec::new(),
        };
        for ((name, bel_row), (pl_name, pl_row)) in bels.into_iter().zip(pls) {
            if name != pl_name {
                return Err(Error::Document("bel and pl rows are not aligned".into()));
            }
            let m = mass_named(&name)?;
            table
                .rows
                .push((format!("bel({name})"), row(&bel_row, &|c| bel(m, c))?));
            table
                .rows
                .push((format!("pl({name})"), row(&pl_row, &|c| pl(m, c))?));
        }
        tables.push(table);
    }

    let combined_printed = printed
        .get("combined")
        .ok_or_else(|| Error::Document("fixture has no combined table".into()))?;
    let order = string_list(combined_printed, "order")?;
    let ordered: Vec<MassFunction> = order
        .iter()
        .map(|n| mass_named(n).cloned())
        .collect::<Result<_>>()?;
    let steps = combine_steps(&ordered)?;
    let combined = steps
        .last()
        .map(|r| r.result.clone())
        .ok_or_else(|| Error::Document("combination needs at least two masses".into()))?;
    let conflicts = steps.iter().map(|r| r.conflict.clone()).collect();
    let name = order.join("⊕");
    let mut table = GoldenTable {
        title: "combined".into(),
        columns: columns.clone(),
        rows: vec![(
            name.clone(),
            row(&string_list(combined_printed, "mass")?, &|c| {
                combined.value(c).clone()
            })?,
        )],
    };
    if combined_printed.get("bel").is_some() {
        let bel_row = row(&string_list(combined_printed, "bel")?, &|c| {
            bel(&combined, c)
        })?;
        let pl_row = row(&string_list(combined_printed, "pl")?, &|c| pl(&combined, c))?;
        table.rows.push((format!("bel({name})"), bel_row));
        table.rows.push((format!("pl({name})"), pl_row));
    }
    tables.push(table);

    Ok(CaseReport {
        case,
        lattice,
        masses,
        combined,
        conflicts,
        tables,
    })
}

fn string_list(value: &Value, key: &str) -> Result<Vec<String>> {
    value
        .get(key)
        .and_then(Value::as_array)
        .ok_or_else(|| Error::Document(format!("missing array `{key}`")))?
        .iter()
        .map(|v| {
            v.as_str()
                .map(str::to_string)
                .ok_or_else(|| Error::Document(format!("`{key}` must hold strings")))
        })
        .collect()
}

fn named_rows(value: &Value, key: &str) -> Result<Vec<(String, Vec<String>)>> {
    let map = value
        .get(key)
        .and_then(Value::as_object)
        .ok_or_else(|| Error::Document(format!("missing object `{key}`")))?;
    map.iter()
        .map(|(name, row)| {
            let row = row
                .as_array()
                .and_then(|r| r.iter().map(|v| v.as_str().map(str::to_string)).collect())
                .ok_or_else(|| {
                    Error::Document(format!("row {name:?} of `{key}` must hold strings"))
                })?;
            Ok((name.clone(), row))
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::ratio;

    #[test]
    fn every_case_recomputes() {
        for case in Case::ALL {
            let report = run_case(case).unwrap();
            assert_eq!(Case::from_id(case.id()), Some(case));
            assert!(!report.tables.is_empty());
        }
        assert_eq!(Case::from_id("movies-4"), None);
    }

    #[test]
    fn case_one_top_is_annotated() {
        let report = run_case(Case::Movies1).unwrap();
        let annotations = report.annotations();
        assert_eq!(annotations.len(), 1);
        assert_eq!(
            annotations[0].to_string(),
            "m1⊕m2 at top: computed 0.05 (1/19), printed 0.06"
        );
        assert_eq!(report.conflicts, [ratio(81, 100)]);
    }

    #[test]
    fn case_two_and_three() {
        let report = run_case(Case::Movies2).unwrap();
        assert_eq!(
            report.cell("combined", "m1⊕m2", "c2").unwrap().computed,
            ratio(1, 1)
        );
        assert!(report.annotations().is_empty());
        let report = run_case(Case::Movies3).unwrap();
        assert_eq!(
            report.cell("combined", "m1⊕m2", "bottom").unwrap().computed,
            ratio(81, 100)
        );
        assert!(report.annotations().is_empty());
        assert_eq!(report.conflicts, [ratio(0, 1)]);
    }

    #[test]
    fn music_tables() {
        let report = run_case(Case::Music).unwrap();
        let cell = |t: &str, r: &str, c: &str| report.cell(t, r, c).unwrap().computed.clone();
        assert_eq!(
            cell("belief and plausibility", "bel(m3)", "Pop"),
            ratio(1, 5)
        );
        assert_eq!(
            cell("belief and plausibility", "pl(m3)", "E-Pop"),
            ratio(1, 5)
        );
        assert_eq!(cell("combined", "m1⊕m2⊕m3", "Funk"), ratio(24, 69));
        let annotations = report.annotations();
        assert_eq!(annotations.len(), 1);
        assert_eq!(
            annotations[0].to_string(),
            "pl(m2) at Pop: computed 1.00 (1), printed 0.6"
        );
    }

    #[test]
    fn rendered_tables_mark_annotations() {
        let tables = run_case(Case::Movies1).unwrap().to_tables();
        let text = tables[1].render_text(NumberStyle::Rounded(2));
        assert!(text.contains("0.05*"), "{text}");
        assert!(text.contains("note: m1⊕m2 at top: computed 0.05 (1/19), printed 0.06"));
        assert!(text.contains("note: conflict at step 1: 0.81 (81/100)"));
    }
}
