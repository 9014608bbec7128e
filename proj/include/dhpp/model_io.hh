// {{{ MIT License
//
// Copyright 2026 The dhpp authors
//
// Permission is hereby granted, free of charge, to any person obtaining a copy
// of this software and associated documentation files (the "Software"), to
// deal in the Software without restriction, including without limitation the
// rights to use, copy, modify, merge, publish, distribute, sublicense, and/or
// sell copies of the Software, and to permit persons to whom the Software is
// furnished to do so, subject to the following conditions:
//
// The above copyright notice and this permission notice shall be included in
// all copies or substantial portions of the Software.
//
// THE SOFTWARE IS PROVIDED "AS IS", WITHOUT WARRANTY OF ANY KIND, EXPRESS OR
// IMPLIED, INCLUDING BUT NOT LIMITED TO THE WARRANTIES OF MERCHANTABILITY,
// FITNESS FOR A PARTICULAR PURPOSE AND NONINFRINGEMENT. IN NO EVENT SHALL THE
// AUTHORS OR COPYRIGHT HOLDERS BE LIABLE FOR ANY CLAIM, DAMAGES OR OTHER
// LIABILITY, WHETHER IN AN ACTION OF CONTRACT, TORT OR OTHERWISE, ARISING
// FROM, OUT OF OR IN CONNECTION WITH THE SOFTWARE OR THE USE OR OTHER DEALINGS
// IN THE SOFTWARE.
//
// }}}

#ifndef DHPP_MODEL_IO_HH
#define DHPP_MODEL_IO_HH

#include <dhpp/interpretation.hh>

#include <string>
#include <string_view>
#include <vector>

namespace dhpp {

// {"formulae": [{"text": "a(1,2)", "lo": "7/10", "hi": "7/10"}, ...]}
std::string writeModel(PInterpretation const &h, int indent = -1);
// JSON array of model objects
std::string writeModels(std::vector<PInterpretation> const &models, int indent = -1);

// Accepts rationals as strings ("0.7", "7/10") or JSON numbers. Throws InvalidModel.
PInterpretation readModel(std::string_view text);

} // namespace dhpp

#endif // DHPP_MODEL_IO_HH
