import ellgraph as eg


def test_monotone_k3_roundtrip():
    g = eg.Graph(3, [(0, 1), (1, 2), (0, 2)])
    lab = eg.Labeling([0, 1, 2])
    emb = eg.build_monotone(g, lab)
    assert len(emb) == 3
    segs = emb.as_dict()
    assert segs[0] == (2, 2, 5, 1)
    assert segs[2] == (6, 6, 1, 5)
    assert eg.validate_embedding_naive(g, emb) == []
    assert eg.labeling_from_embedding(emb) == lab


def test_recognizers_agree():
    g = eg.Graph(4, [(0, 2), (1, 3)])
    lab = eg.Labeling([0, 1, 2, 3])
    w = eg.is_nonjumping_naive(g, lab)
    assert (w.i, w.j, w.k, w.l) == (0, 1, 2, 3)
    assert not eg.is_nonjumping_fast(g, lab)
    assert eg.is_nonjumping_fast(g, eg.Labeling([1, 0, 2, 3]))


def test_jumping8_search_exhausts():
    g = eg.jumping8()
    status, labeling, nodes, complete = eg.find_nonjumping_labeling(g)
    assert status == "exhausted"
    assert labeling is None


def test_interval_labeler():
    iv = eg.IntervalSet([("1", "5"), ("2", "3"), ("4", "6")])
    g = eg.intervals_graph(iv)
    lab = eg.label_interval(iv)
    assert lab.order == [0, 1, 2]
    assert eg.is_nonjumping_naive(g, lab) is None


def test_distance_hereditary_pipeline():
    # P4 is distance-hereditary: three pendant prunes
    g = eg.Graph(4, [(0, 1), (1, 2), (2, 3)])
    steps = eg.pruning_sequence(g)
    assert [s[0] for s in steps] == ["pendant", "pendant", "pendant"]
    emb = eg.embed_distance_hereditary(g)
    assert eg.validate_embedding_naive(g, emb) == []


def test_4leaf_pipeline():
    # root with leaf u and two internal children holding leaves a, b
    t = eg.LeafTree([-1, 0, 0, 0, 2, 3], {1: "u", 4: "a", 5: "b"})
    g, emb = eg.embed_4leaf(t)
    assert g == eg.graph_from_leaf_tree(t, 4)
    assert eg.validate_embedding_naive(g, emb) == []


def test_render_svg_deterministic():
    g = eg.Graph(2, [(0, 1)])
    emb = eg.build_monotone(g, eg.Labeling([0, 1]))
    svg = eg.render_svg(emb, ["a", "b"])
    assert svg.startswith("<svg")
    assert svg == eg.render_svg(emb, ["a", "b"])


def test_parse_canonicalizes():
    text = "graph 3 3\nb a\nc b\na c\n"
    canon = eg.parse("graph", text)
    assert canon == "graph 3 3\na b\na c\nb c\n"
