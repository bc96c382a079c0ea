//! Search the small-group catalogue for a graded group with a block of the
//! requested type and print its multiplication table with parities; used to
//! regenerate data/g32_type_x.tbl.

use areps_core::formats;
use areps_core::grading;
use areps_core::real::DysonType;

fn main() {
    let mut args = std::env::args().skip(1);
    let target = args
        .next()
        .and_then(|t| DysonType::parse(&t))
        .unwrap_or(DysonType::X);
    let max_order: usize = args.next().and_then(|t| t.parse().ok()).unwrap_or(64);
    match grading::search_type(target, max_order) {
        Ok(witness) => {
            eprintln!("# {}", witness.description);
            eprintln!("# seed row {}", witness.seed_row);
            print!(
                "{}",
                formats::render_multiplication_table(witness.graded.ghat())
            );
            eprint!("# parities:");
            for e in 0..witness.graded.ghat().order() as u32 {
                eprint!(" {}", witness.graded.parity(e));
            }
            eprintln!();
        }
        Err(e) => {
            eprintln!("search failed: {e}");
            std::process::exit(1);
        }
    }
}
