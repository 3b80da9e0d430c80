//! Command-line surface. Placeholder while the engine layers are built.

pub fn run(_argv: Vec<String>) -> i32 {
    eprintln!("not yet wired");
    2
}
