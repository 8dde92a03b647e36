import pytest

from permlcs import (
    FormatError,
    PermSet,
    Permutation,
    dumps_permline,
    dumps_permset,
    identity,
    loads_permline,
    loads_permset,
    read_permset,
    reversal,
    write_permline,
    write_permset,
    read_permline,
)


def test_permline_exact_bytes():
    p = Permutation.from_one_line([2, 1, 4, 3])
    assert dumps_permline(p) == "permline 1 4\n2 1 4 3\n"


def test_permline_round_trip(tmp_path):
    p = reversal(9)
    path = tmp_path / "p.permline"
    write_permline(p, path)
    assert read_permline(path) == p
    assert loads_permline(dumps_permline(p)) == p


def test_permset_exact_bytes():
    s = PermSet((identity(3), reversal(3)))
    assert dumps_permset(s) == "permset 1 2 3\n1 2 3\n3 2 1\n"


def test_permset_round_trip(tmp_path):
    s = PermSet((identity(5), reversal(5), Permutation.from_one_line([2, 4, 1, 5, 3])))
    path = tmp_path / "s.permset"
    write_permset(s, path)
    back = read_permset(path)
    assert back.perms == s.perms
    assert back.provenance == "imported"


def test_single_member_permset_parses():
    s = loads_permset("permset 1 1 3\n2 3 1\n")
    assert s.k == 1 and s.perms[0].one_line == (2, 3, 1)


@pytest.mark.parametrize(
    "text",
    [
        "",
        "permline 2 3\n1 2 3\n",
        "permset 1 3\n1 2 3\n",
        "permset 1 2 3\n1 2 3\n",  # missing one body line
        "permset 1 1 3\n1 2\n",  # short value line
        "permset 1 1 3\n1 2 x\n",
        "permset 1 1 3\n1 2 4\n",  # out of range
        "permset 1 1 3\n1 2 2\n",  # duplicate
        "permset 1 1 3\n1 2 3\n1 2 3\n",  # trailing extra line
        "permset 1 0 3\n",
    ],
)
def test_malformed_documents_rejected(text):
    with pytest.raises(FormatError):
        (loads_permline if text.startswith("permline") else loads_permset)(text)
