// Writing an algebra to the JSON format, reading it back, and analysing it.

use leibniz::catalog::example_3_6;
use leibniz::cli::{analyze, to_pretty, AlgebraFile};

fn run() -> leibniz::Result<()> {
    let l = example_3_6(2, 1)?;
    let text = AlgebraFile::from_algebra(&l, None).to_json_string();
    println!("{} bytes of JSON, first lines:", text.len());
    for line in text.lines().take(6) {
        println!("  {line}");
    }
    let back = AlgebraFile::parse(&text)?.to_algebra()?;
    assert_eq!(back, l);
    print!("{}", to_pretty(&analyze(&back).to_json()));
    Ok(())
}

fn main() {
    run().expect("json_interchange");
}
