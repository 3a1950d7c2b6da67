//! Recompute the movie and music examples and list every cell where the
//! rounded result differs from the printed reference value.
//!
//! cargo run --example worked_examples

use conceptual_ds::golden::{run_case, Case};
use conceptual_ds::report::NumberStyle;

fn main() -> conceptual_ds::Result<()> {
    for case in Case::ALL {
        let report = run_case(case)?;
        println!("== {} ==", case.title());
        for table in report.to_tables() {
            print!("{}", table.render_text(NumberStyle::Rounded(2)));
        }
        let annotations = report.annotations();
        println!("{} annotated cell(s)\n", annotations.len());
    }
    Ok(())
}
