//! Matrix JSON in and out: load, print canonically, and reload.

use sectorial::io::{matrix_from_json, matrix_to_json};

pub fn run_example() -> sectorial::Result<()> {
    let src = r#"{"n": 2, "entries": [[[0.1, 0], [1, -2]], [[0, 0], [3.5, 0.25]]]}"#;
    let a = matrix_from_json(src)?;
    let canonical = matrix_to_json(&a);
    print!("{canonical}");
    let again = matrix_to_json(&matrix_from_json(&canonical)?);
    println!("byte-identical after reload: {}", again == canonical);
    Ok(())
}

fn main() {
    run_example().expect("example failed");
}
