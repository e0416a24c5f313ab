// Copyright 2026 The irac Authors.
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

#include <regex>

#include <httplib.h>

#include "irac/errors.hpp"
#include "irac/generator.hpp"

namespace irac {
namespace {

constexpr std::chrono::seconds kConnectTimeout{5};

}  // namespace

HttpGenerator::HttpGenerator(std::string url) {
  static const std::regex re(R"(^(http://[^/\s]+)(/\S*)?$)", std::regex::icase);
  std::smatch m;
  if (!std::regex_match(url, m, re)) {
    throw std::invalid_argument("generator URL must look like http://host:port/path, got '" +
                                url + "'");
  }
  origin_ = m[1].str();
  path_ = m[2].matched && !m[2].str().empty() ? m[2].str() : "/";
}

GenerationResult HttpGenerator::generate(const GeneratorRequest& request,
                                         std::chrono::seconds timeout) {
  httplib::Client client(origin_);
  client.set_connection_timeout(std::min(timeout, kConnectTimeout));
  client.set_read_timeout(timeout);
  client.set_write_timeout(timeout);
  auto result = client.Post(path_, to_json(request).dump(), "application/json");
  if (!result) {
    httplib::Error error = result.error();
    if (error == httplib::Error::Connection || error == httplib::Error::ConnectionTimeout ||
        error == httplib::Error::BindIPAddress || error == httplib::Error::ProxyConnection) {
      throw GeneratorUnreachable("cannot reach generator at " + origin_ + ": " +
                                 httplib::to_string(error));
    }
    if (error == httplib::Error::Read) return {std::nullopt, "timeout"};
    return {std::nullopt, "transport error: " + httplib::to_string(error)};
  }
  if (result->status < 200 || result->status >= 300) {
    return {std::nullopt, "HTTP status " + std::to_string(result->status)};
  }
  auto body = nlohmann::json::parse(result->body, nullptr, /*allow_exceptions=*/false);
  if (body.is_discarded()) return {std::nullopt, "malformed response: invalid JSON"};
  try {
    return {parse_generator_response(body), ""};
  } catch (const MalformedRecord& e) {
    return {std::nullopt, std::string("malformed response: ") + e.what()};
  }
}

}  // namespace irac
