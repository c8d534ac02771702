/*
   Copyright 2026 The gmcfar Authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

       http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#include <gtest/gtest.h>

#include <cstdlib>

#include "gmcfar/detector_kind.hpp"
#include "gmcfar/error.hpp"
#include "gmcfar/format.hpp"

namespace gmcfar {
namespace {

TEST(FormatDouble, RoundTrips) {
    for (double v : {0.1, 1.0 / 3.0, 6.9444444444444441e-3, 1e-300, 123456789.0}) {
        EXPECT_EQ(std::strtod(format_double(v).c_str(), nullptr), v);
    }
    EXPECT_EQ(format_double(0.1875), "0.1875");
    EXPECT_EQ(format_double(1.0 / 3.0, 9), "0.333333333");
}

TEST(CsvField, QuotesWhenNeeded) {
    EXPECT_EQ(csv_field("plain"), "plain");
    EXPECT_EQ(csv_field("a,b"), "\"a,b\"");
    EXPECT_EQ(csv_field("say \"hi\""), "\"say \"\"hi\"\"\"");
    EXPECT_EQ(csv_field("two\nlines"), "\"two\nlines\"");
}

TEST(DetectorKindNames, RoundTrip) {
    for (auto k : kAllDetectorKinds) EXPECT_EQ(parse_detector_kind(to_string(k)), k);
    EXPECT_EQ(to_string(DetectorKind::GmFullMulti), "full-multi");
    EXPECT_THROW(parse_detector_kind("full"), DomainError);
}

}  // namespace
}  // namespace gmcfar
