import hypercurveball as hcb


def test_dataset_roundtrip(tmp_path):
    h = hcb.gen_artificial(1)
    assert h.node_count == 51
    assert h.edge_count == 51
    path = tmp_path / "ds1.txt"
    hcb.write_hypergraph(h, str(path))
    back = hcb.read_hypergraph(str(path))
    assert hcb.canonical_key(back) == hcb.canonical_key(h)


def test_randomize_preserves_degrees():
    h = hcb.gen_artificial(1)
    r = hcb.randomize(h, "dm", "trade", steps=500, seed=7)
    assert sorted(hcb.node_degrees(r)) == sorted(hcb.node_degrees(h))
    assert sorted(hcb.edge_degrees(r)) == sorted(hcb.edge_degrees(h))
    assert hcb.in_space(r, "dm")
    # same seed, same result
    again = hcb.randomize(h, "dm", "trade", steps=500, seed=7)
    assert hcb.canonical_key(again) == hcb.canonical_key(r)


def test_verify_two_state_example():
    v = hcb.verify_uniform([(2, 0), (2, 0)], [(2, 0), (2, 0)],
                           directed=False, space="dm", method="trade")
    assert v["verdict"] == "uniform"
    assert v["n_states"] == 2
    assert v["max_deviation"] < 1e-9


def test_stub_count_and_text_io():
    h = hcb.loads("a b\na b\n")
    assert hcb.stub_count(h) == 2
    text = hcb.dumps(h)
    assert hcb.canonical_key(hcb.loads(text)) == hcb.canonical_key(h)


def test_mixing_and_prediction():
    h = hcb.gen_artificial(1)
    assert hcb.predict_faster(h) == "hypercurveball"
    curve = hcb.mixing_curve(h, "dm", "trade", steps=400, runs=4,
                             record_every=20, seed=3)
    assert curve["steps"][0] == 0
    assert curve["mean"][0] == 0.0
    assert curve["mean"][-1] > 0.5
