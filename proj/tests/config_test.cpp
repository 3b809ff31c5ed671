#include <aeeopt/config.hpp>

#include <gtest/gtest.h>

#include <sstream>

#include "oracles.hpp"

using namespace aee;

namespace {

const char* kDefaultsText = R"(# comment line
p_s_dbm            = 10
p_jm_dbm           = 13
p_m_dbm            = 13
g_su_db            = -60
g_sa_db            = -70
g_au_db            = -70
sigma2_dbm         = -100
nu                 = 0.7

p_ft_dbm           = -0.33
p_fr_dbm           = -0.33
rho_d_dbm_per_rate = -10.33
)";

RunConfig parse_text(const std::string& text) {
  std::istringstream in(text);
  return parse_config(in);
}

}  // namespace

TEST(Config, ParsesDefaultsWithConversions) {
  const RunConfig c = parse_text(kDefaultsText);
  const LinkGains g = test::default_gains();
  const SystemParams p = test::default_params();
  EXPECT_DOUBLE_EQ(c.gains.g_su, g.g_su);
  EXPECT_DOUBLE_EQ(c.gains.g_sa, g.g_sa);
  EXPECT_DOUBLE_EQ(c.gains.g_au, g.g_au);
  EXPECT_DOUBLE_EQ(c.params.p_s, p.p_s);
  EXPECT_DOUBLE_EQ(c.params.sigma2, p.sigma2);
  EXPECT_DOUBLE_EQ(c.params.p_jm, p.p_jm);
  EXPECT_DOUBLE_EQ(c.params.p_m, p.p_m);
  EXPECT_DOUBLE_EQ(c.params.p_fr, p.p_fr);
  EXPECT_DOUBLE_EQ(c.params.p_ft, p.p_ft);
  EXPECT_DOUBLE_EQ(c.params.rho_d, p.rho_d);
  EXPECT_DOUBLE_EQ(c.params.nu, 0.7);
}

TEST(Config, RejectsUnknownKey) {
  EXPECT_THROW(parse_text(std::string(kDefaultsText) + "bogus_key = 1\n"),
               config_error);
}

TEST(Config, RejectsMissingKey) {
  std::string text = kDefaultsText;
  text.erase(text.find("sigma2_dbm"), text.find("nu") - text.find("sigma2_dbm"));
  EXPECT_THROW(parse_text(text), config_error);
}

TEST(Config, RejectsDuplicateKey) {
  EXPECT_THROW(parse_text(std::string(kDefaultsText) + "nu = 0.5\n"),
               config_error);
}

TEST(Config, RejectsMalformedLines) {
  EXPECT_THROW(parse_text("p_s_dbm 10\n"), config_error);
  EXPECT_THROW(parse_text("p_s_dbm = ten\n"), config_error);
  EXPECT_THROW(parse_text("p_s_dbm = 10 watts\n"), config_error);
}

TEST(Config, RejectsOutOfRangeValues) {
  std::string text = kDefaultsText;
  text.replace(text.find("nu                 = 0.7"),
               std::string("nu                 = 0.7").size(),
               "nu                 = 1.7");
  EXPECT_THROW(parse_text(text), config_error);
}

TEST(Config, MissingFile) {
  EXPECT_THROW(load_config("/nonexistent/path.cfg"), config_error);
}
