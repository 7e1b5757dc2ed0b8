import pytest

from ffkdf import cache
from ffkdf.characters import gauss_table
from ffkdf.errors import IoError
from ffkdf.field import construct_field


def test_roundtrip_is_byte_identical(tmp_path):
    F = construct_field("3^2")
    (path,) = cache.warm(tmp_path, ["3^2"])
    text = path.read_text()
    assert text == cache.dumps_table(F, gauss_table(F))
    assert cache.load(tmp_path, "3^2") == gauss_table(F).g
    cache.warm(tmp_path, ["3^2"])
    assert path.read_text() == text


def test_twists_are_separate(tmp_path):
    cache.warm(tmp_path, ["5"], twist=2)
    assert cache.load(tmp_path, "5") is None
    assert cache.load(tmp_path, "5", twist=2) == gauss_table(construct_field("5"), 2).g


def test_stale_header_is_a_miss(tmp_path):
    (path,) = cache.warm(tmp_path, ["7"])
    path.write_text(path.read_text().replace('"generator":3', '"generator":5'))
    assert cache.load(tmp_path, "7") is None


def test_warm_stat_clear(tmp_path):
    cache.warm(tmp_path, ["3", "2^2", "5"])
    st = cache.stat(tmp_path)
    assert st["files"] == 3 and st["entries"] == 2 + 3 + 4
    assert sorted(t["entries"] for t in st["tables"]) == [2, 3, 4]
    assert cache.clear(tmp_path) == 3
    assert cache.stat(tmp_path)["entries"] == 0


def test_missing_dir(tmp_path):
    with pytest.raises(IoError):
        cache.stat(tmp_path / "absent")
    with pytest.raises(IoError):
        cache.clear(None)
