// Transcriptions of the printed tables. Polynomials are coefficient lists
// ascending in u = v^2; cells not listed are zero.
#include <map>

#include "coxstrata/errors.hpp"
#include "coxstrata/golden.hpp"

namespace coxstrata {
namespace {

constexpr std::string_view kDihedralPsi5 = R"(table dihedral_psi_p5
type I2(5)
kind poly
provenance dihedral Psi matrix, p=5
rows c,c^2,s,1
cols 1_0,2_1,2_2,1_5
entry c 1_0 1
entry c^2 1_0 1,0,1
entry c^2 2_1 0,1
entry s 1_0 1
entry s 2_1 1
entry s 2_2 1
entry 1 1_0 1
entry 1 2_1 2
entry 1 2_2 2
entry 1 1_5 1
)";

constexpr std::string_view kDihedralPsi7 = R"(table dihedral_psi_p7
type I2(7)
kind poly
provenance dihedral Psi matrix, p=7
rows c,c^2,c^3,s,1
cols 1_0,2_1,2_2,2_3,1_7
entry c 1_0 1
entry c^2 1_0 1,0,1
entry c^2 2_1 0,1
entry c^3 1_0 1,0,1,0,1
entry c^3 2_1 0,1,0,1
entry c^3 2_2 0,0,1
entry s 1_0 1
entry s 2_1 1
entry s 2_2 1
entry s 2_3 1
entry 1 1_0 1
entry 1 2_1 2
entry 1 2_2 2
entry 1 2_3 2
entry 1 1_7 1
)";

constexpr std::string_view kDihedralPsi8 = R"(table dihedral_psi_p8
type I2(8)
kind poly
provenance dihedral Psi matrix, p=8
rows c,c^2,c^3,c^4,s,t,1
cols 1_0,2_1,2_2,2_3,1',1'',1_8
entry c 1_0 1
entry c^2 1_0 1,0,1
entry c^2 2_1 0,1
entry c^3 1_0 1,0,1,0,1
entry c^3 2_1 0,1,0,1
entry c^3 2_2 0,0,1
entry c^4 1_0 1,0,1,0,1,0,1
entry c^4 2_1 0,1,0,1,0,1
entry c^4 2_2 0,0,1,0,1
entry c^4 2_3 0,0,0,1
entry s 1_0 1
entry s 2_1 1
entry s 2_2 1
entry s 2_3 1
entry s 1' 1
entry t 1_0 1
entry t 2_1 1
entry t 2_2 1
entry t 2_3 1
entry t 1'' 1
entry 1 1_0 1
entry 1 2_1 2
entry 1 2_2 2
entry 1 2_3 2
entry 1 1' 1
entry 1 1'' 1
entry 1 1_8 1
typo c 1_8 | row printed with 6 cells: 1&0&0&0&0&0 | closed form Psi_<c> = 1_0 fixes the missing cell at 0
typo c^4 1_0 | v^12+v^8+v^4+1 | exponent braces lost; closed form for c^{p/2} gives v^12+v^8+v^4+1
typo c^4 2_1 | v^10+v^6+v^2 | exponent braces lost; closed form for c^{p/2} gives v^10+v^6+v^2
)";

constexpr std::string_view kDihedralAA7 = R"(table dihedral_aa_p7
type I2(7)
kind poly
provenance dihedral product A A', p=7
rows c,c^2,c^3,s,1
cols 1_0,2_1,2_2,2_3,1_7
entry c 1_0 0,0,1
entry c 2_1 0,-1
entry c 1_7 1
entry c^2 1_0 0,0,0,0,1
entry c^2 2_2 0,0,-1
entry c^2 1_7 1
entry c^3 1_0 0,0,0,0,0,0,1
entry c^3 2_3 0,0,0,-1
entry c^3 1_7 1
entry s 1_0 0,-1,1
entry s 2_1 1,-2,1
entry s 2_2 1,-2,1
entry s 2_3 1,-2,1
entry s 1_7 1,-1
entry 1 1_0 1,-2,1
entry 1 2_1 2,-4,2
entry 1 2_2 2,-4,2
entry 1 2_3 2,-4,2
entry 1 1_7 1,-2,1
)";

constexpr std::string_view kDihedralAA8 = R"(table dihedral_aa_p8
type I2(8)
kind poly
provenance dihedral product A A', p=8
rows c,c^2,c^3,c^4,s,t,1
cols 1_0,2_1,2_2,2_3,1',1'',1_8
entry c 1_0 0,0,1
entry c 2_1 0,-1
entry c 1_8 1
entry c^2 1_0 0,0,0,0,1
entry c^2 2_2 0,0,-1
entry c^2 1_8 1
entry c^3 1_0 0,0,0,0,0,0,1
entry c^3 2_3 0,0,0,-1
entry c^3 1_8 1
entry c^4 1_0 0,0,0,0,0,0,0,0,1
entry c^4 1' 0,0,0,0,-1
entry c^4 1'' 0,0,0,0,-1
entry c^4 1_8 1
entry s 1_0 0,-1,1
entry s 2_1 1,-2,1
entry s 2_2 1,-2,1
entry s 2_3 1,-2,1
entry s 1' 0,-1,1
entry s 1'' 1,-1
entry s 1_8 1,-1
entry t 1_0 0,-1,1
entry t 2_1 1,-2,1
entry t 2_2 1,-2,1
entry t 2_3 1,-2,1
entry t 1' 1,-1
entry t 1'' 0,-1,1
entry t 1_8 1,-1
entry 1 1_0 1,-2,1
entry 1 2_1 2,-4,2
entry 1 2_2 2,-4,2
entry 1 2_3 2,-4,2
entry 1 1' 1,-2,1
entry 1 1'' 1,-2,1
entry 1 1_8 1,-2,1
)";

constexpr std::string_view kDihedralApp7 = R"(table dihedral_app_p7
type I2(7)
kind poly
provenance dihedral matrix A'' times h, p=7
rows 1_0,2_1,2_2,2_3,1_7
cols 1_0,2_1,2_2,2_3,1_7
denominator 1,0,-1,0,0,0,0,-1,0,1
entry 1_0 1_0 0,0,0,0,0,0,0,1
entry 1_0 2_1 0,1,0,0,0,0,1
entry 1_0 2_2 0,0,1,0,0,1
entry 1_0 2_3 0,0,0,1,1
entry 1_0 1_7 1
entry 2_1 1_0 0,1,0,0,0,0,1
entry 2_1 2_1 1,0,1,0,0,1,0,1
entry 2_1 2_2 0,1,0,1,1,0,1
entry 2_1 2_3 0,0,1,1,1,1
entry 2_1 1_7 0,1,0,0,0,0,1
entry 2_2 1_0 0,0,1,0,0,1
entry 2_2 2_1 0,1,0,1,1,0,1
entry 2_2 2_2 1,0,0,1,1,0,0,1
entry 2_2 2_3 0,1,1,0,0,1,1
entry 2_2 1_7 0,0,1,0,0,1
entry 2_3 1_0 0,0,0,1,1
entry 2_3 2_1 0,0,1,1,1,1
entry 2_3 2_2 0,1,1,0,0,1,1
entry 2_3 2_3 1,1,0,0,0,0,1,1
entry 2_3 1_7 0,0,0,1,1
entry 1_7 1_0 1
entry 1_7 2_1 0,1,0,0,0,0,1
entry 1_7 2_2 0,0,1,0,0,1
entry 1_7 2_3 0,0,0,1,1
entry 1_7 1_7 0,0,0,0,0,0,0,1
typo 1_0 2_2 | v^4+v{10} | exponent brace lost; symmetric entry and the closed form give v^4+v^10
typo 1_7 2_2 | v^4+v{10} | exponent brace lost; symmetric entry and the closed form give v^4+v^10
)";

constexpr std::string_view kDihedralApp8 = R"(table dihedral_app_p8
type I2(8)
kind poly
provenance dihedral matrix A'' times h, p=8
rows 1_0,2_1,2_2,2_3,1',1'',1_8
cols 1_0,2_1,2_2,2_3,1',1'',1_8
denominator 1,0,-1,0,0,0,0,0,-1,0,1
entry 1_0 1_0 0,0,0,0,0,0,0,0,1
entry 1_0 2_1 0,1,0,0,0,0,0,1
entry 1_0 2_2 0,0,1,0,0,0,1
entry 1_0 2_3 0,0,0,1,0,1
entry 1_0 1' 0,0,0,0,1
entry 1_0 1'' 0,0,0,0,1
entry 1_0 1_8 1
entry 2_1 1_0 0,1,0,0,0,0,0,1
entry 2_1 2_1 1,0,1,0,0,0,1,0,1
entry 2_1 2_2 0,1,0,1,0,1,0,1
entry 2_1 2_3 0,0,1,0,2,0,1
entry 2_1 1' 0,0,0,1,0,1
entry 2_1 1'' 0,0,0,1,0,1
entry 2_1 1_8 0,1,0,0,0,0,0,1
entry 2_2 1_0 0,0,1,0,0,0,1
entry 2_2 2_1 0,1,0,1,0,1,0,1
entry 2_2 2_2 1,0,0,0,2,0,0,0,1
entry 2_2 2_3 0,1,0,1,0,1,0,1
entry 2_2 1' 0,0,1,0,0,0,1
entry 2_2 1'' 0,0,1,0,0,0,1
entry 2_2 1_8 0,0,1,0,0,0,1
entry 2_3 1_0 0,0,0,1,0,1
entry 2_3 2_1 0,0,1,0,2,0,1
entry 2_3 2_2 0,1,0,1,0,1,0,1
entry 2_3 2_3 1,0,1,0,0,0,1,0,1
entry 2_3 1' 0,1,0,0,0,0,0,1
entry 2_3 1'' 0,1,0,0,0,0,0,1
entry 2_3 1_8 0,0,0,1,0,1
entry 1' 1_0 0,0,0,0,1
entry 1' 2_1 0,0,0,1,0,1
entry 1' 2_2 0,0,1,0,0,0,1
entry 1' 2_3 0,1,0,0,0,0,0,1
entry 1' 1' 0,0,0,0,0,0,0,0,1
entry 1' 1'' 1
entry 1' 1_8 0,0,0,0,1
entry 1'' 1_0 0,0,0,0,1
entry 1'' 2_1 0,0,0,1,0,1
entry 1'' 2_2 0,0,1,0,0,0,1
entry 1'' 2_3 0,1,0,0,0,0,0,1
entry 1'' 1' 1
entry 1'' 1'' 0,0,0,0,0,0,0,0,1
entry 1'' 1_8 0,0,0,0,1
entry 1_8 1_0 1
entry 1_8 2_1 0,1,0,0,0,0,0,1
entry 1_8 2_2 0,0,1,0,0,0,1
entry 1_8 2_3 0,0,0,1,0,1
entry 1_8 1' 0,0,0,0,1
entry 1_8 1'' 0,0,0,0,1
entry 1_8 1_8 0,0,0,0,0,0,0,0,1
typo 1_8 2_2 | v^4+v^{12} v^6+v^{10} | cell separator missing between columns 2_2 and 2_3; symmetric entries fix both cells
)";

constexpr std::string_view kB3Psi = R"(table b3_psi
type B3
kind poly
provenance B3 Psi matrix
rows .3,.21,1.2,3.,2.1,.111,1.11,21.,11.1,111
cols 1_0,3_1,2_2,3_2,1_3,3_3,3_4,2_5,1_6,1_9
entry .3 1_0 1
entry .21 1_0 1,0,1
entry .21 3_1 0,1
entry 1.2 1_0 1
entry 1.2 3_1 1
entry 1.2 2_2 1
entry 3. 1_0 1
entry 3. 3_1 1
entry 3. 3_2 1
entry 3. 1_3 1
entry 2.1 1_0 1
entry 2.1 3_1 1
entry 2.1 2_2 1
entry 2.1 3_2 1
entry 2.1 3_3 1
entry .111 1_0 1,0,1,0,1,0,1
entry .111 3_1 0,1,0,1,0,1
entry .111 2_2 0,0,1,0,1
entry .111 3_2 0,0,1,0,1
entry .111 1_3 0,0,0,-2
entry .111 3_3 0,0,0,1
entry 1.11 1_0 1,0,1
entry 1.11 3_1 1,1,1
entry 1.11 2_2 1,0,1
entry 1.11 3_2 0,1
entry 1.11 3_3 0,1
entry 1.11 3_4 0,1
entry 21. 1_0 1
entry 21. 3_1 2
entry 21. 2_2 1
entry 21. 3_2 2
entry 21. 1_3 1
entry 21. 3_3 1
entry 21. 3_4 1
entry 21. 2_5 1
entry 11.1 1_0 1
entry 11.1 3_1 2
entry 11.1 2_2 2
entry 11.1 3_2 1
entry 11.1 3_3 2
entry 11.1 3_4 1
entry 11.1 1_6 1
entry 111 1_0 1
entry 111 3_1 3
entry 111 2_2 2
entry 111 3_2 3
entry 111 1_3 1
entry 111 3_3 3
entry 111 3_4 3
entry 111 2_5 2
entry 111 1_6 1
entry 111 1_9 1
typo 21. * | 21.1 | a bipartition of 3 cannot read 21.1; the only unused class name of B3 is 21., confirmed by the trivial-column check
)";

constexpr std::string_view kH3Psi = R"(table h3_psi
type H3
kind poly
provenance H3 Psi matrix
rows c_3,c_5,(12),c_9,(23),(13),c_15,(1212),(1),(-)
cols 1_0,3_1,5_2,3_3,4_3,4_4,5_5,3_6,3_8,1_15
entry c_3 1_0 1
entry c_5 1_0 1,0,1
entry c_5 3_1 0,1
entry (12) 1_0 1
entry (12) 3_1 1
entry (12) 5_2 1
entry (12) 3_3 1
entry c_9 1_0 1,0,1,0,1,0,1
entry c_9 3_1 0,1,0,1,0,1
entry c_9 5_2 0,0,1,0,1
entry c_9 4_3 0,0,0,1
entry (23) 1_0 1
entry (23) 3_1 1
entry (23) 5_2 1
entry (23) 3_3 1
entry (23) 4_3 1
entry (23) 4_4 1
entry (13) 1_0 1
entry (13) 3_1 1
entry (13) 5_2 2
entry (13) 3_3 1
entry (13) 4_3 1
entry (13) 4_4 1
entry (13) 5_5 1
entry c_15 1_0 1,0,1,0,1,0,-1,0,1,0,1,0,1
entry c_15 3_1 0,1,0,1,0,-1,0,-1,0,1,0,1
entry c_15 5_2 0,0,1,0,2,0,2,0,2,0,1
entry c_15 3_3 0,0,0,1,0,-1,0,-1,0,1
entry c_15 4_3 0,0,0,1,0,1,0,1,0,1
entry c_15 4_4 0,0,0,0,1,0,-1,0,1
entry c_15 5_5 0,0,0,0,0,1,0,1
entry c_15 3_6 0,0,0,0,0,0,-2
entry (1212) 1_0 1,0,1
entry (1212) 3_1 1,1,1
entry (1212) 5_2 1,1,1
entry (1212) 3_3 1,0,1
entry (1212) 4_3 0,1
entry (1212) 4_4 0,1
entry (1212) 5_5 0,1
entry (1212) 3_6 0,1
entry (1) 1_0 1
entry (1) 3_1 2
entry (1) 5_2 3
entry (1) 3_3 2
entry (1) 4_3 2
entry (1) 4_4 2
entry (1) 5_5 2
entry (1) 3_6 1
entry (1) 3_8 1
entry (-) 1_0 1
entry (-) 3_1 3
entry (-) 5_2 5
entry (-) 3_3 3
entry (-) 4_3 4
entry (-) 4_4 4
entry (-) 5_5 5
entry (-) 3_6 3
entry (-) 3_8 3
entry (-) 1_15 1
)";

constexpr std::string_view kH3Sigma = R"(table h3_sigma
type H3
kind map
provenance H3 strata map with Psi at (C, sigma(C))
rows c_3,c_5,(12),c_9,(23),c_15,(1212),(13),(1),(-)
cols 1_0,3_1,5_2,3_3,4_3,4_4,5_5,3_6,3_8,1_15
entry c_3 1_0 1
entry c_5 3_1 0,1
entry (12) 3_3 1
entry c_9 4_3 0,0,0,1
entry (23) 4_4 1
entry c_15 5_5 0,0,0,0,0,1,0,1
entry (1212) 5_5 0,1
entry (13) 5_5 1
entry (1) 3_8 1
entry (-) 1_15 1
set irr_star 3_6
set irr_star_star
set image 1_0,3_1,3_3,4_3,4_4,5_5,3_8,1_15
)";

constexpr std::string_view kH4Sigma = R"(table h4_sigma
type H4
kind map
provenance H4 strata map with Psi at (C, sigma(C))
rows c_4,c_6,c_8,c_10,c_12,c_16,c_14,(123),c'_16,c_18,c_20,c_22,(12123),c_24,c_26,(124),c_28,c_30,(243),(12),c_40,c_38,c_36,(123)^3,(134),(23),c_48,(12124),c_60,(123)^5,(1212),(13),(1),(-)
cols 1_0,4_1,9_2,16_3,25_4,36_5,16_6,9_6,24_6,4_7,24_7,40_8,48_9,30_10,30'_10,18_10,24_11,16_11,24_12,10_12,8_12,6_12,16_13,8_13,36_15,25_16,16_18,6_20,16_21,9_22,9_26,4_31,4_37,1_60
entry c_4 1_0 1
entry c_6 4_1 0,1
entry c_8 9_2 0,0,1
entry c_10 16_3 0,0,0,1
entry c_12 25_4 0,0,0,0,1
entry c_16 36_5 0,0,0,0,0,1,0,1
entry c_14 36_5 0,0,0,0,0,1
entry (123) 36_5 1
entry c'_16 24_6 0,0,0,0,0,0,1
entry c_18 24_7 0,0,0,0,0,0,0,1
entry c_20 40_8 0,0,0,0,0,0,0,0,1
entry c_22 48_9 0,0,0,0,0,0,0,0,0,1
entry (12123) 48_9 0,1
entry c_24 18_10 0,0,0,0,0,0,0,0,0,0,1
entry c_26 24_11 0,0,0,0,0,0,0,0,0,0,0,1
entry (124) 24_12 1
entry c_28 8_12 0,0,0,0,0,0,0,0,0,0,0,0,1
entry c_30 8_13 0,0,0,0,0,0,0,0,0,0,0,0,0,1
entry (243) 8_13 1
entry (12) 36_15 1
entry c_40 25_16 0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,1,0,1,0,1
entry c_38 25_16 0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,1,0,1
entry c_36 25_16 0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,1
entry (123)^3 25_16 0,0,0,1
entry (134) 25_16 1
entry (23) 16_21 1
entry c_48 9_22 0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,1
entry (12124) 9_22 0,1
entry c_60 9_26 0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,1,0,1,0,1
entry (123)^5 9_26 0,0,0,0,0,1,0,1
entry (1212) 9_26 0,1
entry (13) 9_26 1
entry (1) 4_37 1
entry (-) 1_60 1
set irr_star 4_7,30_10,16_11,10_12,6_12,16_13,16_18,6_20,4_31
set irr_star_star 9_6,16_6,30'_10
set image 1_0,4_1,9_2,16_3,25_4,36_5,24_6,24_7,40_8,48_9,18_10,24_11,24_12,8_12,8_13,36_15,25_16,16_21,9_22,9_26,4_37,1_60
)";

constexpr std::string_view kH3Cross = R"(table h3_cross_sections
type H3
kind list
provenance images of the two H3 cross-sections
set tau_prime c_3,c_5,(12),c_9,(23),c_15,(1),(-)
set tau_doubleprime c_3,c_5,(12),c_9,(23),(1212),(1),(-)
typo tau_doubleprime * | second list also headed as the image of tau' | the preceding definitions introduce both maps, so the second list is read as the image of tau''
)";

constexpr std::string_view kH4Cross = R"(table h4_cross_sections
type H4
kind list
provenance images of the two H4 cross-sections
set tau_prime c_4,c_6,c_8,c_10,c_12,c_16,c'_16,c_18,c_20,c_22,c_24,c_26,(124),c_28,c_30,(12),c_40,(23),c_48,c_60,(1),(-)
set tau_doubleprime c_4,c_6,c_8,c_10,c_12,(123),c'_16,c_18,c_20,(12123),c_24,c_26,(124),c_28,(243),(12),(134),(23),(12124),(13),(1),(-)
)";

const std::map<std::string, std::string_view, std::less<>>& registry() {
  static const std::map<std::string, std::string_view, std::less<>> tables{
      {"dihedral_psi_p5", kDihedralPsi5}, {"dihedral_psi_p7", kDihedralPsi7}, {"dihedral_psi_p8", kDihedralPsi8},
      {"dihedral_aa_p7", kDihedralAA7},   {"dihedral_aa_p8", kDihedralAA8},   {"dihedral_app_p7", kDihedralApp7},
      {"dihedral_app_p8", kDihedralApp8}, {"b3_psi", kB3Psi},                 {"h3_psi", kH3Psi},
      {"h3_sigma", kH3Sigma},             {"h4_sigma", kH4Sigma},             {"h3_cross_sections", kH3Cross},
      {"h4_cross_sections", kH4Cross},
  };
  return tables;
}

}  // namespace

const std::vector<std::string>& embedded_table_names() {
  static const std::vector<std::string> names = [] {
    std::vector<std::string> out;
    for (const auto& [name, text] : registry()) out.push_back(name);
    return out;
  }();
  return names;
}

std::string_view embedded_table_text(std::string_view name) {
  const auto it = registry().find(name);
  if (it == registry().end()) throw NoMatch("no embedded table named '" + std::string(name) + "'");
  return it->second;
}

}  // namespace coxstrata
