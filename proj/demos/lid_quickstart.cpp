// Copyright 2026 The lingkit Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// Trains a tiny identifier on a handful of sentences and ranks a few inputs.

#include <cstdio>
#include <iostream>

#include "lingkit/lingkit.hpp"

int main() {
  using lingkit::LanguageTag;
  const auto yor = LanguageTag::parse("yor");
  const auto swa = LanguageTag::parse("swa");
  const auto amh = LanguageTag::parse("amh");

  const std::vector<lingkit::LabeledSentence> train = {
      {yor, "ọmọ mi ti lọ si ọja"},       {yor, "ẹ kú àárọ̀ ọ̀rẹ́ mi"},
      {yor, "mo fẹ́ jẹun ní ilé"},         {swa, "habari ya asubuhi rafiki yangu"},
      {swa, "ninapenda kusoma vitabu"},    {swa, "watoto wanacheza nje ya nyumba"},
      {amh, "ሰላም ነው ወዳጄ"},                 {amh, "እኔ ወደ ገበያ እሄዳለሁ"},
      {amh, "ልጆቹ በቤት ውስጥ ይጫወታሉ"},
  };

  lingkit::lid::LidFeatureConfig config;
  config.min_df = 1;
  const auto model = lingkit::lid::train_lid(train, config);

  for (const char* text : {"ọmọ mi", "rafiki yangu", "ወደ ቤት"}) {
    const auto pred = lingkit::lid::identify(model, text);
    std::printf("%-16s", text);
    for (const auto& s : pred.ranked) std::printf("  %s %.4f", s.lang.str().c_str(), s.posterior);
    std::printf("\n");
  }
}
