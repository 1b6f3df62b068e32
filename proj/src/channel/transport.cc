// Copyright 2026 The zkgame Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "zkg/channel/transport.h"

namespace zkg::channel {

std::pair<std::unique_ptr<MemoryTransport>, std::unique_ptr<MemoryTransport>>
MemoryTransport::CreatePair() {
  auto a_to_b = std::make_shared<Queue>();
  auto b_to_a = std::make_shared<Queue>();
  std::unique_ptr<MemoryTransport> a(new MemoryTransport(b_to_a, a_to_b));
  std::unique_ptr<MemoryTransport> b(new MemoryTransport(a_to_b, b_to_a));
  return {std::move(a), std::move(b)};
}

Status MemoryTransport::Send(ByteView wire_message) {
  std::lock_guard lock(outbox_->mu);
  if (outbox_->closed) {
    return MakeError(Errc::kConnectionClosed, "peer closed");
  }
  outbox_->messages.emplace_back(wire_message.begin(), wire_message.end());
  outbox_->cv.notify_all();
  return OkStatus();
}

Result<Bytes> MemoryTransport::Receive() {
  std::unique_lock lock(inbox_->mu);
  inbox_->cv.wait(lock, [&] { return !inbox_->messages.empty() || inbox_->closed; });
  if (inbox_->messages.empty()) {
    return MakeError(Errc::kConnectionClosed, "connection closed");
  }
  Bytes msg = std::move(inbox_->messages.front());
  inbox_->messages.pop_front();
  return msg;
}

void MemoryTransport::Close() {
  for (auto* q : {inbox_.get(), outbox_.get()}) {
    std::lock_guard lock(q->mu);
    q->closed = true;
    q->cv.notify_all();
  }
}

Status CapturingTransport::Send(ByteView wire_message) {
  {
    std::lock_guard lock(mu_);
    sent_.emplace_back(wire_message.begin(), wire_message.end());
  }
  if (observer_) observer_(wire_message);
  return inner_->Send(wire_message);
}

std::vector<Bytes> CapturingTransport::sent() const {
  std::lock_guard lock(mu_);
  return sent_;
}

size_t CapturingTransport::sent_bytes() const {
  std::lock_guard lock(mu_);
  size_t total = 0;
  for (const auto& m : sent_) total += m.size();
  return total;
}

size_t CapturingTransport::sent_frame_bytes() const {
  std::lock_guard lock(mu_);
  size_t total = 0;
  for (const auto& m : sent_) {
    if (m.size() > kLengthPrefixBytes &&
        m[kLengthPrefixBytes] == static_cast<uint8_t>(MsgType::kFrame)) {
      total += m.size();
    }
  }
  return total;
}

}  // namespace zkg::channel
