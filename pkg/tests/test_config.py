import pytest

from paracomp.config import Config, parse_assignments
from paracomp.errors import ConfigError


def test_defaults():
    cfg = Config()
    assert (cfg.min_tree_freq, cfg.min_lcs_ratio, cfg.max_trees, cfg.max_affix_len) == (2, 0.5, 200, 8)
    assert (cfg.min_lemma_score, cfg.max_new_lemmas, cfg.max_overlap, cfg.max_slots) == (2, 1000, 0.1, 200)
    assert (cfg.dev_fraction, cfg.seed, cfg.max_context, cfg.bootstrap_rounds) == (0.1, 0, 6, 1)


def test_file_roundtrip(tmp_path):
    path = tmp_path / "cfg.txt"
    path.write_text("# tuned on nothing\nmax_trees = 50\nmin_lcs_ratio=0.25  # comment\n\n")
    cfg = Config.from_file(path)
    assert cfg.max_trees == 50 and cfg.min_lcs_ratio == 0.25
    path.write_text(cfg.to_text())
    assert Config.from_file(path) == cfg


@pytest.mark.parametrize(
    "text",
    ["bogus = 1", "max_trees = many", "max_trees", "min_lcs_ratio = 1.5", "max_trees = -1", "dev_fraction = 0.7", "max_slots = 0"],
)
def test_bad_config(tmp_path, text):
    path = tmp_path / "cfg.txt"
    path.write_text(text)
    with pytest.raises(ConfigError):
        Config.from_file(path)


def test_overrides():
    cfg = Config().with_overrides(parse_assignments(["seed=7", "max_overlap = 0.2"]))
    assert cfg.seed == 7 and cfg.max_overlap == 0.2
    with pytest.raises(ConfigError):
        parse_assignments(["seed"])
