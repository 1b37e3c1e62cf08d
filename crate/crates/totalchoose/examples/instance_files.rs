//! Generates a random multigraph instance with lists, writes it in the text
//! format, reads it back, colors it, and prints the coloring lines.

use totalchoose::color::total_color;
use totalchoose::format::{
    read_instance, write_coloring, write_instance, InstanceFile, InstanceMeta,
};
use totalchoose::generate::{gen_lists, gen_random_multigraph};

fn main() {
    let seed = 11;
    let delta = 4;
    let graph = gen_random_multigraph(10, delta, 0.4, seed).expect("generation");
    let lists = gen_lists(&graph, 2 * delta - 1, 4 * delta as u32, seed).expect("lists");
    let inst = InstanceFile {
        graph,
        lists: Some(lists),
        meta: InstanceMeta {
            seed: Some(seed),
            delta: Some(delta),
            palette: Some(4 * delta as u32),
        },
    };

    let text = write_instance(&inst);
    println!("--- instance file ---\n{text}");

    let parsed = read_instance(&text).expect("parse");
    assert_eq!(
        write_instance(&parsed),
        text,
        "round trip is byte-identical"
    );

    let coloring = total_color(&parsed.graph, parsed.lists.as_ref().unwrap()).expect("coloring");
    println!(
        "--- coloring file ---\n{}",
        write_coloring(&parsed.graph, &coloring)
    );
}
