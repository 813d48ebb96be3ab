use ptbe_core::model::{Graph, LeafTree, PtbeInstance};
use ptbe_core::oracles::ptbe_brute;

fn tree(edges: &[(u32, u32)]) -> LeafTree {
    LeafTree::new(Graph::from_edges(edges.iter().copied())).unwrap()
}

#[test]
fn caterpillar_121_gap() {
    // spine 0-1-2, leaves 3@0, 4,5@1, 6@2
    let t = tree(&[(0, 1), (1, 2), (0, 3), (1, 4), (1, 5), (2, 6)]);
    let p1 = vec![(3, 4), (6, 5)];
    let p2 = vec![(3, 5), (4, 6)];
    let src = PtbeInstance::new(t.clone(), vec![p1.clone(), p2.clone()]).unwrap();
    let src_verdict = ptbe_brute(&src, 9).unwrap();
    // star target: center 7 adjacent to all of 0..=6, pages p1, p2, E(T)
    let mut star_edges: Vec<(u32, u32)> = (0..=6).map(|v| (7, v)).collect();
    let star = tree(&star_edges.drain(..).collect::<Vec<_>>());
    let et = vec![(0, 1), (1, 2), (0, 3), (1, 4), (1, 5), (2, 6)];
    let tgt = PtbeInstance::new(star, vec![p1, p2, et]).unwrap();
    let tgt_verdict = ptbe_brute(&tgt, 9).unwrap();
    eprintln!("caterpillar(1,2,1): source {:?} target {:?}", src_verdict, tgt_verdict);
}

#[test]
fn singleton_spine_gap() {
    // spine 0-1-2-3, one leaf each: 4,5,6,7
    let t = tree(&[(0, 1), (1, 2), (2, 3), (0, 4), (1, 5), (2, 6), (3, 7)]);
    let page = vec![(4, 6), (5, 7)];
    let src = PtbeInstance::new(t, vec![page.clone()]).unwrap();
    let src_verdict = ptbe_brute(&src, 9).unwrap();
    let star = tree(&(0..=7).map(|v| (8, v)).collect::<Vec<_>>());
    let et = vec![(0, 1), (1, 2), (2, 3), (0, 4), (1, 5), (2, 6), (3, 7)];
    let tgt = PtbeInstance::new(star, vec![page, et]).unwrap();
    let tgt_verdict = ptbe_brute(&tgt, 9).unwrap();
    eprintln!("spine(1,1,1,1): source {:?} target {:?}", src_verdict, tgt_verdict);
}

#[test]
fn tripod_gap() {
    // center 0, legs 0-1-4, 0-2-5, 0-3-6
    let t = tree(&[(0, 1), (1, 4), (0, 2), (2, 5), (0, 3), (3, 6)]);
    let src = PtbeInstance::new(t, vec![vec![]]).unwrap();
    let src_verdict = ptbe_brute(&src, 9).unwrap();
    let star = tree(&(0..=6).map(|v| (7, v)).collect::<Vec<_>>());
    let et = vec![(0, 1), (1, 4), (0, 2), (2, 5), (0, 3), (3, 6)];
    let tgt = PtbeInstance::new(star, vec![vec![], et]).unwrap();
    let tgt_verdict = ptbe_brute(&tgt, 9).unwrap();
    eprintln!("tripod: source {:?} target {:?}", src_verdict, tgt_verdict);
}
