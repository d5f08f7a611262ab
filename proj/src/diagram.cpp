#include "mvalg/diagram.hpp"

#include "mvalg/morphism.hpp"
#include "mvalg/real_semigroup.hpp"
#include "mvalg/sign_space.hpp"
#include "mvalg/special_group.hpp"
#include "mvalg/spectra.hpp"

namespace mvalg {

namespace {

void agree(CheckReport& report, const std::string& id, const FiniteMultiring& x, const FiniteMultiring& y) {
  if (isomorphic(x, y)) {
    report.pass(id);
  } else {
    report.fail_text(id, {"none found"}, "no isomorphism");
  }
}

// The ARS of a multifield without its zero function, read as an AOS.
SignSpace units_part(const SignSpace& ars) {
  std::vector<std::string> names;
  std::vector<SignVector> values;
  for (std::size_t f = 0; f < ars.size(); ++f) {
    bool nonzero = true;
    for (int v : ars.values(f)) nonzero = nonzero && v != 0;
    if (!nonzero) continue;
    names.push_back(ars.functions().name(f));
    values.push_back(ars.values(f));
  }
  return SignSpace(SpaceMode::aos, ars.points(), Carrier(std::move(names)), std::move(values));
}

}  // namespace

CheckReport diagram_audit(const FiniteMultiring& a) {
  CheckReport report;
  const CheckReport rr = is_real_reduced_mr(a);
  if (!rr.overall()) {
    report.fail_text("real_reduced", {a.carrier().render(a.all())}, "not a real reduced multiring");
    return report;
  }
  report.pass("real_reduced");

  const RealSemigroup s = mrred_to_rs(a);
  report.merge(mr_rs_roundtrip(a), "rs.");
  report.merge(rs_roundtrip(s), "rs.");
  const SignSpace ars = mrred_to_ars(a);
  report.merge(mr_ars_roundtrip(a), "ars.");
  report.merge(ars_roundtrip(ars), "ars.");
  const FiniteMultiring from_rs = rs_to_mrred(s);
  const FiniteMultiring from_ars = ars_to_mrred(ars);
  agree(report, "agree.RS~ARS", from_rs, from_ars);
  agree(report, "agree.ARS~A", from_ars, a);

  if (!classify(a).multifield) {
    report.skip("multifield", "not a multifield; SG and AOS edges do not apply");
    return report;
  }
  report.pass("multifield");

  const CheckReport smf = check_smf(a);
  report.merge(smf, "sg.smf.");
  if (smf.overall()) {
    const SpecialGroup g = mf_to_sg(a);
    report.merge(smf_roundtrip(a), "sg.");
    report.merge(sg_roundtrip(g), "sg.");
    report.merge(check_reduced(g), "sg.reduced.");
    agree(report, "agree.SG~RS", sg_to_mf(g), from_rs);
  }

  const CheckReport mf = is_real_reduced_mf(a);
  report.merge(mf, "aos.mf_red.");
  if (mf.overall()) {
    const SignSpace aos = mfred_to_aos(a);
    report.merge(mf_aos_roundtrip(a), "aos.");
    report.merge(aos_roundtrip(aos), "aos.");
    agree(report, "agree.AOS~ARS", aos_to_mfred(aos, a.name(a.zero())), from_ars);
    const SignSpace units = units_part(ars);
    if (find_space_isomorphism(units, aos)) {
      report.pass("agree.ARS_units~AOS");
    } else {
      report.fail_text("agree.ARS_units~AOS", {"none found"}, "no space isomorphism");
    }
  }
  return report;
}

}  // namespace mvalg
