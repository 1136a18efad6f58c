from rmcert.quantum.cartan import check_cartan_conditions


def test_statuses():
    report = check_cartan_conditions()
    status = {c.name: c.status for c in report.checks}
    assert status["membership.alpha_i(x)id"] == "pass"
    assert status["membership.-h+id(x)alpha_i"] == "pass"
    assert status["membership.id(x)alpha_i"] == "pass"
    assert status["membership.h+alpha_i(x)id"] == "warn"
    assert status["contraction.id(x)alpha_1"] == "pass"
    assert status["affine-image.alpha_1"] == "pass"
    assert status["affine-image.alpha_4"] == "warn"
    assert report.failures == []


def test_alpha4_readings_detail():
    detail = check_cartan_conditions().get("affine-image.alpha_4").detail
    assert "printed: image (-1/4, -1/2, -49/60) -> fails" in detail
    assert "corrected: image (-1/4, -1/2, -3/4) -> holds" in detail
