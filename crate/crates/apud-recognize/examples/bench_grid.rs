use apud_geometry::rational::rat;
use apud_graph::{make_pattern, PatternKind};
use apud_recognize::{solve_placement_grid, GridOutcome, SearchBudget};
use apud_geometry::LineConfig;
use std::time::Instant;

fn main() {
    let budget = SearchBudget { step: rat(1, 20), window: rat(4, 1), max_nodes: u64::MAX };
    let cross = LineConfig::origin_cross();
    for kind in [PatternKind::Cycle(5), PatternKind::Star(5), PatternKind::Sun(4),
                 PatternKind::Cycle(4), PatternKind::Star(4), PatternKind::Sun(3),
                 PatternKind::Net, PatternKind::Sunlet(4)] {
        let g = make_pattern(kind).unwrap();
        let t = Instant::now();
        let out = solve_placement_grid(&g, &cross, &budget).unwrap();
        let tag = match &out {
            GridOutcome::Found { .. } => "FOUND",
            GridOutcome::NotFound { .. } => "NOT-FOUND",
            GridOutcome::Exhausted { .. } => "EXHAUSTED",
        };
        println!("{:10} {:9} nodes={:<12} {:.2}s", kind.to_string(), tag, out.nodes(), t.elapsed().as_secs_f64());
    }
}
