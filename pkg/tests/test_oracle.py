import pytest

from signedtiling.oracle import (Certificate, Placement, default_window, enumerate_placements, solve,
                                 solve_rect, verify_certificate)
from signedtiling.polyring import Domain
from signedtiling.tilesets import CellSet, inflated_L_region, rect_region, tileset


def test_placement_counts():
    tiles = tileset(6)
    got = enumerate_placements(tiles, (0, 0, 5, 5))
    expected = sum((7 - s.width) * (7 - s.height) for s in tiles.shapes)
    assert len(got) == expected
    assert enumerate_placements(tiles, (0, 0, 2, 2)) == []
    square_only = [p for p in enumerate_placements(tileset(4, True), (0, 0, 2, 2)) if p.tile_index == 4]
    assert len(square_only) == 4


def test_default_window():
    assert default_window(rect_region(3, 2), 2) == (-2, -2, 4, 3)
    with pytest.raises(ValueError):
        default_window(rect_region(3, 2), -1)


def test_solve_examples():
    cert = solve(rect_region(6, 2), tileset(6), Domain.Z, margin=6)
    assert cert is not None and cert.scale == 1
    assert verify_certificate(cert, rect_region(6, 2))

    sq = solve(rect_region(2, 2), tileset(4, True), Domain.Z, margin=0)
    assert sq.entries == ((Placement(4, 0, 0), 1),)


@pytest.mark.parametrize("margin", [0, 2, 4])
def test_untileable_square(margin):
    assert solve(rect_region(3, 3), tileset(4), Domain.Z, margin=margin) is None


def test_rational_certificate_has_scale():
    # 8x3 needs weights with denominator k-2 = 2 for n = 8
    region = rect_region(8, 3)
    assert solve(region, tileset(8), Domain.Z) is None
    cert = solve(region, tileset(8), Domain.Q)
    assert cert is not None and cert.scale > 1
    assert verify_certificate(cert, region)


def test_verify_rejects_tampering():
    region = rect_region(4, 2)
    cert = solve_rect(4, False, 4, 2)
    assert verify_certificate(cert, region)
    (p, w), *rest = cert.entries
    flipped = Certificate(cert.tileset_name, cert.n, cert.plus, cert.scale, ((p, -w), *rest), cert.window)
    assert not verify_certificate(flipped, region)
    empty = Certificate(cert.tileset_name, cert.n, cert.plus, 1, (), cert.window)
    assert not verify_certificate(empty, region)
    zero_scale = Certificate(cert.tileset_name, cert.n, cert.plus, 0, cert.entries, cert.window)
    assert not verify_certificate(zero_scale, region)


def test_certificate_text_round_trip():
    cert = solve_rect(4, False, 4, 2)
    again = Certificate.from_text(cert.to_text())
    assert again == cert
    with pytest.raises(ValueError):
        Certificate.from_text("0 0 0 1\n")


def test_region_outside_window():
    with pytest.raises(ValueError):
        solve(rect_region(4, 2), tileset(4), window=(0, 0, 2, 2))


def test_inflated_unit_region_is_single_tile():
    cert = solve(inflated_L_region(8, 1), tileset(8), Domain.Z, margin=0)
    assert cert.entries == ((Placement(2, 0, 0), 1),)


def test_non_rect_region():
    region = CellSet.of([(0, 0), (1, 0), (0, 1), (1, 1), (2, 0), (3, 0), (2, 1), (3, 1)])
    assert verify_certificate(solve(region, tileset(4)), region)
