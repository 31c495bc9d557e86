/*
 * Copyright 2026 The treexfer Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#pragma once

#include <stdexcept>
#include <string>

namespace treexfer {

/// Base of every exception thrown by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class ParseError : public Error {
 public:
  using Error::Error;
};

/// A vertex address or point does not exist in the tree.
class InvalidAddress : public Error {
 public:
  using Error::Error;
};

/// A ray leaves the tree or dies in a leaf.
class InvalidRay : public Error {
 public:
  using Error::Error;
};

/// The tree description itself violates its invariants.
class InvalidSpec : public Error {
 public:
  using Error::Error;
};

class OutOfRange : public Error {
 public:
  using Error::Error;
};

/// Raised by checks that need a non-empty boundary on a finite tree.
class NoBoundary : public Error {
 public:
  using Error::Error;
};

}  // namespace treexfer
